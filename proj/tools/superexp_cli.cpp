#include <cstdio>
int main() { std::puts("superexp"); return 0; }
