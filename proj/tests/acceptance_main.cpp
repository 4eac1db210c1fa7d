#include <iostream>

#include "ffheight/acceptance.hpp"

int main() { return ffheight::run_acceptance_suite(std::cout) == 0 ? 0 : 1; }
