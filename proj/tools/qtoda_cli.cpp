#include "qtoda/qtoda.hpp"
int main() { return 0; }
