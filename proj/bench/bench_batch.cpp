#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sgscore/harness.hpp"
#include "support/synthetic.hpp"

using namespace sgscore;

namespace {

template <typename Fn>
RunReport timed(const char *label, Fn fn) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport report = fn();
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  std::printf("%-12s %9.1f ms   entries=%zu M=%zu\n", label, ms,
              report.captions.size(), report.zero_count);
  return report;
}

}  // namespace

int main(int argc, char **argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 2000;
  testgen::SyntheticDataset data = testgen::make_synthetic_dataset(7, n);

  BatchOptions options;
  options.baselines.bleu = true;
  options.baselines.rouge = true;
  options.baselines.cider = true;

  RunReport serial = timed("serial", [&] {
    return run_batch_serial(data.entries, data.lexicon, options);
  });
  std::string expected = serial.to_jsonl();

  for (int w : {1, 2, 4, 8}) {
    options.workers = w;
    std::string label = "workers=" + std::to_string(w);
    RunReport parallel = timed(label.c_str(), [&] {
      return run_batch(data.entries, data.lexicon, options);
    });
    if (parallel.to_jsonl() != expected) {
      std::printf("FAIL: %s report differs from serial\n", label.c_str());
      return 1;
    }
  }
  std::printf("all parallel reports byte-identical to the serial reference\n");
  return 0;
}
