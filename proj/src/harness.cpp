#include "actlab/harness.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "actlab/errors.hpp"

namespace actlab {

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified_within_bounds: return "verified-within-bounds";
    case ClaimStatus::counterexample: return "counterexample";
    case ClaimStatus::partial: return "partial";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

namespace claims {
std::vector<Claim> build_registry();
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = claims::build_registry();
  return registry;
}

const Claim& find_claim(const std::string& id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaimError("no claim with id '" + id + "'");
}

Report verify(const std::string& id, const Bounds& bounds,
              const HarnessEnv& env) {
  const Claim& claim = find_claim(id);
  Report r;
  r.claim = claim.id;
  r.bounds = bounds;
  auto t0 = std::chrono::steady_clock::now();
  claim.checker(bounds, env, r);
  if (claim.partial_by_design &&
      r.status == ClaimStatus::verified_within_bounds)
    r.status = ClaimStatus::partial;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

std::vector<Report> verify_all(const Bounds& bounds, int jobs,
                               const HarnessEnv& env) {
  const std::vector<Claim>& registry = claim_registry();
  std::vector<Report> out(registry.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= registry.size()) return;
      try {
        out[i] = verify(registry[i].id, bounds, env);
      } catch (const SizeGuardError& e) {
        out[i] = Report{};
        out[i].claim = registry[i].id;
        out[i].bounds = bounds;
        out[i].status = ClaimStatus::skipped;
        out[i].note = e.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  return out;
}

}  // namespace actlab
