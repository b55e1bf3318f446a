#include <vector>
class Kept { public: void run(); };
