#include "ratsol/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "ratsol/chains.hpp"

namespace ratsol {

std::vector<ColouredSequence> sweep_inputs(long p, long bound) {
  std::vector<ColouredSequence> out;
  for (long k = 1; k <= p; k += 2) enumerate_sequences(p, k, bound, [&](const ColouredSequence& s) { out.push_back(s); });
  return out;
}

namespace {

std::string check_one(const ColouredSequence& s) {
  try {
    const auto chain = build_chain(s);
    const auto rc = verify_chain(chain);
    if (!rc.ok()) return "chain: " + rc.failures.front().message;
    const auto rp = verify_painleve(to_painleve(chain));
    if (!rp.ok()) return "painleve: " + rp.failures.front().message;
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
  return {};
}

}  // namespace

SweepResult verify_sweep(const std::vector<ColouredSequence>& inputs, unsigned jobs,
                         const std::function<void(long)>& progress) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> messages(inputs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<long> done{0};
  std::mutex report_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      messages[i] = check_one(inputs[i]);
      const long d = ++done;
      if (progress) {
        std::lock_guard lock(report_mutex);
        progress(d);
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult r;
  r.instances = static_cast<long>(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!messages[i].empty()) r.failures.push_back({inputs[i], messages[i]});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace ratsol
