class Open {
  int a; /* never closed
  int b;
};
