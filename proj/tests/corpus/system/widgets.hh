/* Minimal retained-mode widget toolkit. */
class Widget {
 public:
  Widget();
  virtual ~Widget();
  void show();
  void hide();
  bool visible();
  Widget* parent;

 protected:
  virtual void paint(Canvas& canvas);
  int width, height;

 private:
  bool shown;
  unsigned long flags;
};

class Label : public Widget {
 public:
  explicit Label(const char* text);
  void set_text(const char* text);

 private:
  char* text_;
};

class Button : public Label, protected Clickable {
 public:
  Button(const char* text, int command);
  int command;

 protected:
  void paint(Canvas& canvas);
};

class Window : public Widget {
 public:
  void add(Widget* child);
  void close();
  Widget** children;
  Label title;

 private:
  int child_count;
  int capacity;
  friend void run_event_loop(Window& root);
};

class Dialog : public Window {
 public:
  int exec();
  Button accept, reject;
};
