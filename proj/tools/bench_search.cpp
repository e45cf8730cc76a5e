#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "diotrip/degenerate.hpp"
#include "diotrip/search.hpp"

// Times the parallel index search against the serial reference on the
// degenerate interleaved sequence and confirms both return the same triples.
int main(int argc, char** argv) {
  const long cap = argc > 1 ? std::stol(argv[1]) : 24;
  const diotrip::CounterexampleSpec spec = diotrip::canonical_counterexample();
  const diotrip::Polynomial one(1);

  const auto timed = [](const auto& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return std::make_pair(std::move(result), elapsed.count());
  };

  std::cout << std::left << std::setw(8) << "bound" << std::setw(12) << "serial_s"
            << std::setw(12) << "parallel_s" << std::setw(10) << "speedup" << std::setw(11)
            << "solutions" << "match" << "\n";

  bool all_match = true;
  for (long bound = 8; bound <= cap; bound += 4) {
    const auto [serial, serial_s] =
        timed([&] { return diotrip::search_reference(spec.g, one, bound); });
    const auto [parallel, parallel_s] =
        timed([&] { return diotrip::search(spec.g, one, bound, 0, 0); });
    const bool match =
        serial.solutions == parallel.solutions && serial.skipped == parallel.skipped;
    all_match = all_match && match;
    std::cout << std::left << std::setw(8) << bound << std::setw(12) << std::fixed
              << std::setprecision(4) << serial_s << std::setw(12) << parallel_s
              << std::setw(10) << std::setprecision(2) << (serial_s / parallel_s)
              << std::setw(11) << serial.solutions.size() << (match ? "yes" : "NO") << "\n";
  }
  return all_match ? 0 : 1;
}
