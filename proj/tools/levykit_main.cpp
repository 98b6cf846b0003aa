#include <cstdio>
int main() { std::puts("levykit: cli under construction"); return 0; }
