/*
Copyright 2026 The rs2 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "rs2/derand.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace rs2 {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<std::uint64_t> eval_all(const std::vector<Seed>& seeds, const Objective& obj, unsigned threads) {
  std::vector<std::uint64_t> out(seeds.size());
  if (threads <= 1 || seeds.size() < 2) {
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      out[i] = obj.value(seeds[i]);
    }
    return out;
  }
  const unsigned t_count = std::min<unsigned>(threads, static_cast<unsigned>(seeds.size()));
  std::vector<std::exception_ptr> errors(t_count);
  std::vector<std::thread> pool;
  pool.reserve(t_count);
  for (unsigned t = 0; t < t_count; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < seeds.size(); i += t_count) {
          out[i] = obj.value(seeds[i]);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

// Folds evaluated seeds into the running minimum; earlier seeds win ties.
void absorb(SearchResult& r, std::vector<Seed>& seeds, const std::vector<std::uint64_t>& values) {
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (r.examined == 0 || values[i] < r.value) {
      r.value = values[i];
      r.seed = std::move(seeds[i]);
    }
    r.total += values[i];
    ++r.count;
    ++r.examined;
  }
}

bool le_mean(std::uint64_t value, u128 total, u128 count) {
  if (count == 0) {
    return true;
  }
  return value <= total / count;
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Auto:
      return "auto";
    case Backend::Exhaustive:
      return "exhaustive";
    case Backend::Greedy:
      return "greedy";
    case Backend::Scan:
      return "scan";
    case Backend::Random:
      return "random";
  }
  return "?";
}

const char* to_string(MeanKind k) {
  switch (k) {
    case MeanKind::Exact:
      return "exact";
    case MeanKind::Subfamily:
      return "subfamily";
    case MeanKind::None:
      return "none";
  }
  return "?";
}

Backend parse_backend(const std::string& s) {
  for (Backend b : {Backend::Auto, Backend::Exhaustive, Backend::Greedy, Backend::Scan, Backend::Random}) {
    if (s == to_string(b)) {
      return b;
    }
  }
  throw std::invalid_argument("unknown backend '" + s + "'");
}

double SearchResult::mean() const {
  return count == 0 ? static_cast<double>(value) : static_cast<double>(total) / static_cast<double>(count);
}

bool SearchResult::within_mean() const { return mean_kind == MeanKind::None || le_mean(value, total, count); }

double MeanCheck::mean() const { return count == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(count); }

SearchResult find_seed_exhaustive(const HashSpec& spec, const Objective& obj, std::uint64_t budget, unsigned threads) {
  FamilyEnumerator it(spec, budget);
  SearchResult r;
  r.backend = Backend::Exhaustive;
  r.mean_kind = MeanKind::Exact;
  std::vector<Seed> chunk;
  Seed s;
  bool more = true;
  while (more) {
    chunk.clear();
    while (chunk.size() < 4096 && (more = it.next(s))) {
      chunk.push_back(s);
    }
    if (!chunk.empty()) {
      absorb(r, chunk, eval_all(chunk, obj, threads));
    }
  }
  return r;
}

SearchResult find_seed_greedy(const HashSpec& spec, const Objective& obj, std::uint64_t stage_budget) {
  SearchResult r;
  r.backend = Backend::Greedy;
  r.mean_kind = MeanKind::Exact;
  Seed fixed(spec.k, 0);
  for (unsigned pos = spec.k; pos-- > 0;) {
    // Completions of positions 0..pos-1, for each of the p candidates.
    u128 free_count = 1;
    for (unsigned i = 0; i < pos; ++i) {
      free_count *= spec.p;
    }
    if (free_count * spec.p > stage_budget) {
      throw BudgetExceeded("greedy stage for position " + std::to_string(pos) + " of " + spec.str() +
                           " exceeds stage budget " + std::to_string(stage_budget));
    }
    const HashSpec sub{pos, spec.p, spec.domain, spec.range};
    u128 best_sum = 0;
    std::uint64_t best_c = 0;
    for (std::uint64_t c = 0; c < spec.p; ++c) {
      u128 sum = 0;
      Seed s = fixed;
      s[pos] = c;
      for (u128 idx = 0; idx < free_count; ++idx) {
        const Seed low = seed_at(sub, idx);
        for (unsigned i = 0; i < pos; ++i) {
          s[i] = low[i];
        }
        sum += obj.value(s);
        ++r.examined;
      }
      if (pos + 1 == spec.k) {
        r.total += sum;
        r.count += free_count;
      }
      if (c == 0 || sum < best_sum) {
        best_sum = sum;
        best_c = c;
      }
    }
    fixed[pos] = best_c;
  }
  r.seed = fixed;
  r.value = obj.value(fixed);
  return r;
}

Seed scan_seed(const HashSpec& spec, std::uint64_t index, std::uint64_t salt) {
  Seed s(spec.k);
  for (unsigned j = 0; j < spec.k; ++j) {
    s[j] = splitmix64(splitmix64(salt) ^ (index * spec.k + j)) % spec.p;
  }
  return s;
}

SearchResult find_seed_scan(const HashSpec& spec, const Objective& obj, std::uint64_t max_seeds,
                            std::optional<std::uint64_t> target, unsigned threads, std::uint64_t salt) {
  SearchResult r;
  r.backend = Backend::Scan;
  r.mean_kind = MeanKind::Subfamily;
  std::vector<Seed> batch;
  for (std::uint64_t start = 0; start < max_seeds; start += kScanBatch) {
    batch.clear();
    for (std::uint64_t i = start; i < std::min(start + kScanBatch, max_seeds); ++i) {
      batch.push_back(scan_seed(spec, i, salt));
    }
    absorb(r, batch, eval_all(batch, obj, threads));
    if (target && r.value <= *target) {
      break;
    }
  }
  return r;
}

SearchResult find_seed_random(const HashSpec& spec, const Objective& obj, std::mt19937_64& rng) {
  SearchResult r;
  r.backend = Backend::Random;
  r.mean_kind = MeanKind::None;
  r.seed.resize(spec.k);
  for (auto& a : r.seed) {
    a = std::uniform_int_distribution<std::uint64_t>(0, spec.p - 1)(rng);
  }
  r.value = obj.value(r.seed);
  r.examined = 1;
  return r;
}

MeanCheck verify_mean_bound(const HashSpec& spec, const Objective& obj, std::uint64_t bound, std::uint64_t budget) {
  FamilyEnumerator it(spec, budget);
  MeanCheck c;
  Seed s;
  while (it.next(s)) {
    c.total += obj.value(s);
    ++c.count;
  }
  c.holds = c.total <= static_cast<u128>(bound) * c.count;
  return c;
}

Derandomizer::Derandomizer(DerandConfig config, RoundLedger* ledger)
    : config_(config), ledger_(ledger), rng_(config.random_seed) {}

SearchResult Derandomizer::search(const std::string& stage, const HashSpec& spec, const Objective& obj,
                                  std::optional<std::uint64_t> target) {
  SearchResult r;
  switch (config_.backend) {
    case Backend::Exhaustive:
      r = find_seed_exhaustive(spec, obj, config_.budget, config_.threads);
      break;
    case Backend::Greedy:
      r = find_seed_greedy(spec, obj, config_.budget);
      break;
    case Backend::Scan:
      r = find_seed_scan(spec, obj, target ? config_.scan_limit : config_.scan_seeds, target, config_.threads,
                         steps_.size());
      break;
    case Backend::Random:
      r = find_seed_random(spec, obj, rng_);
      break;
    case Backend::Auto:
      if (spec.family_size() <= config_.budget) {
        r = find_seed_exhaustive(spec, obj, config_.budget, config_.threads);
      } else {
        r = find_seed_scan(spec, obj, target ? config_.scan_limit : config_.scan_seeds, target, config_.threads,
                           steps_.size());
      }
      break;
  }
  if (ledger_ != nullptr) {
    ledger_->charge_derand(stage);
  }
  DerandStep step;
  step.stage = stage;
  step.objective = obj.name;
  step.spec = spec;
  step.backend = r.backend;
  step.value = r.value;
  step.scale = obj.scale;
  step.mean = r.mean();
  step.mean_kind = r.mean_kind;
  step.within_mean = r.within_mean();
  step.examined = r.examined;
  step.seed = r.seed;
  steps_.push_back(std::move(step));
  return r;
}

}  // namespace rs2
