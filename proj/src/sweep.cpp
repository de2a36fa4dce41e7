#include "powergraph/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace powergraph {

void SweepConfig::validate() const {
  if (lo < 2) throw std::invalid_argument("range lower bound must be at least 2");
  if (hi < lo) throw std::invalid_argument("range upper bound must not be below the lower bound");
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (class_cap < 4) throw std::invalid_argument("class cap must be at least 4");
}

SweepOutcome run_sweep(const SweepConfig& config) {
  config.validate();
  const std::uint64_t count = config.hi - config.lo + 1;
  std::vector<std::optional<VerifyOutcome>> slots(static_cast<std::size_t>(count));

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= count) return;
      const std::uint64_t n = config.lo + idx;
      try {
        VerifyOutcome outcome =
            verify_full(factorize(n), config.oracle, config.class_cap, config.exhaustive_limit);
        const bool failed = !outcome.record.match || !outcome.record.disconnection_ok;
        slots[static_cast<std::size_t>(idx)] = std::move(outcome);
        if (failed && config.abort_on_failure) stop.store(true, std::memory_order_relaxed);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const unsigned worker_count =
      static_cast<unsigned>(std::min<std::uint64_t>(config.workers, count));
  std::vector<std::thread> pool;
  pool.reserve(worker_count);
  for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  SweepOutcome outcome;
  outcome.aborted = stop.load();
  outcome.entries.reserve(slots.size());
  for (auto& slot : slots) {
    if (!slot) continue;
    if (!slot->record.match || !slot->record.disconnection_ok) ++outcome.failure_count;
    outcome.entries.push_back(std::move(*slot));
  }
  return outcome;
}

}  // namespace powergraph
