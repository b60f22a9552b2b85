// Acceptance suite: runs every criterion at desk scale, one PASS/FAIL
// line per criterion, nonzero exit on any failure.

#include <iostream>

#include <poikm/selftest.hpp>

int main() {
  return poikm::run_acceptance(std::cout) ? 0 : 1;
}
