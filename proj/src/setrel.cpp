// Copyright 2026 The syncsem Authors
// SPDX-License-Identifier: Apache-2.0

#include "syncsem/setrel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

#include <omp.h>

namespace syncsem {

namespace {

std::vector<Redex> subset_redexes(const SetRelation::StepFn& step, const TermSet& u) {
  std::vector<Redex> out;
  const std::uint64_t count = std::uint64_t{1} << u.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    TermSet b = u.subset(mask);
    Successors succ = step(b);
    if (!succ.states.empty()) out.push_back({std::move(b), std::move(succ.states)});
  }
  return out;
}

void check_universe(const SetRelation& r, const TermSet& universe) {
  if (universe.size() > r.limits().max_universe || universe.size() >= 63) {
    throw SizeCapExceeded(universe.size(), r.limits().max_universe);
  }
}

}  // namespace

SetRelation::SetRelation(std::string name, StepFn step, RedexFn redexes, Limits limits)
    : name_(std::move(name)), step_(std::move(step)), redexes_(std::move(redexes)), limits_(limits) {
  if (!redexes_) {
    redexes_ = [step = step_](const TermSet& u) { return subset_redexes(step, u); };
  }
}

std::vector<Redex> SetRelation::redexes(const TermSet& u) const {
  if (u.size() > limits_.max_set_size) throw SizeCapExceeded(u.size(), limits_.max_set_size);
  std::vector<Redex> out = redexes_(u);
  std::sort(out.begin(), out.end(), [](const Redex& a, const Redex& b) { return a.lhs < b.lhs; });
  return out;
}

std::vector<Redex> SetRelation::proper_redexes(const TermSet& u) const {
  std::vector<Redex> out = redexes(u);
  std::erase_if(out, [](const Redex& r) { return r.lhs.empty(); });
  return out;
}

SetRelation SetRelation::with_limits(Limits limits) const {
  SetRelation copy = *this;
  copy.limits_ = limits;
  return copy;
}

PriorityFn uniform_priority() {
  return [](const TermSet&) { return std::uint64_t{0}; };
}

std::string Strategy::check(const SetRelation& r, const TermSet& a, const std::vector<TermSet>& choice) {
  for (std::size_t i = 0; i < choice.size(); ++i) {
    const TermSet& b = choice[i];
    if (b.empty()) return "empty member " + std::to_string(i);
    if (!a.includes(b)) return b.to_string() + " is not a subset of " + a.to_string();
    if (!r.is_redex(b)) return b.to_string() + " is not a redex";
    for (std::size_t j = i + 1; j < choice.size(); ++j) {
      if (b.intersects(choice[j])) return b.to_string() + " overlaps " + choice[j].to_string();
    }
  }
  return {};
}

SetRelation identity_rel(Limits limits) {
  return SetRelation(
      "id", [](const TermSet& a) { return Successors{{a}, false}; }, {}, limits);
}

SetRelation nfold(const SetRelation& r, std::size_t n) {
  return SetRelation(
      r.name() + "^" + std::to_string(n),
      [r, n](const TermSet& a) {
        Successors out{{a}, false};
        for (std::size_t i = 0; i < n && !out.states.empty(); ++i) {
          Family next;
          for (const TermSet& x : out.states) {
            Successors s = r.step(x);
            out.cutoff = out.cutoff || s.cutoff;
            next.merge(s.states);
          }
          out.states = std::move(next);
        }
        return out;
      },
      {}, r.limits());
}

Successors reachable(const SetRelation& r, const TermSet& a, std::size_t bound) {
  Successors out{{a}, false};
  Family layer{a};
  std::set<Family> past_layers{layer};
  for (std::size_t depth = 0; depth < bound; ++depth) {
    Family next;
    for (const TermSet& x : layer) {
      Successors s = r.step(x);
      out.cutoff = out.cutoff || s.cutoff;
      next.merge(s.states);
    }
    if (next.empty()) return out;
    out.states.insert(next.begin(), next.end());
    // A repeated layer means the layers cycle forever: nothing new will be
    // found, and chains longer than any bound exist.
    if (!past_layers.insert(next).second) {
      out.cutoff = true;
      return out;
    }
    layer = std::move(next);
  }
  for (const TermSet& x : layer) {
    if (!r.step(x).states.empty()) {
      out.cutoff = true;
      break;
    }
  }
  return out;
}

Successors normalize(const SetRelation& r, const TermSet& a, std::size_t bound) {
  Successors all = reachable(r, a, bound);
  Successors out{{}, all.cutoff};
  for (const TermSet& x : all.states) {
    if (r.step(x).states.empty()) out.states.insert(x);
  }
  return out;
}

SetRelation star(const SetRelation& r, std::size_t bound) {
  return SetRelation(
      r.name() + "*", [r, bound](const TermSet& a) { return reachable(r, a, bound); }, {}, r.limits());
}

SetRelation normalized(const SetRelation& r, std::size_t bound) {
  return SetRelation(
      r.name() + "!", [r, bound](const TermSet& a) { return normalize(r, a, bound); }, {}, r.limits());
}

SetRelation async_ext(const SetRelation& r) {
  return SetRelation(
      "async(" + r.name() + ")",
      [r](const TermSet& a) {
        Successors out;
        for (const Redex& red : r.proper_redexes(a)) {
          const TermSet rest = set_difference(a, red.lhs);
          for (const TermSet& reduct : red.reducts) out.states.insert(set_union(rest, reduct));
        }
        return out;
      },
      {}, r.limits());
}

namespace {

// Enumerates every nonempty family of pairwise-disjoint redexes together with
// a choice of reduct for each member.
void parallel_families(const std::vector<Redex>& reds, std::size_t i, const TermSet& used, const TermSet& added,
                       bool any, const TermSet& a, Family& out) {
  if (i == reds.size()) {
    if (any) out.insert(set_union(set_difference(a, used), added));
    return;
  }
  parallel_families(reds, i + 1, used, added, any, a, out);
  if (reds[i].lhs.intersects(used)) return;
  const TermSet now_used = set_union(used, reds[i].lhs);
  for (const TermSet& reduct : reds[i].reducts) {
    parallel_families(reds, i + 1, now_used, set_union(added, reduct), true, a, out);
  }
}

}  // namespace

SetRelation parallel_ext(const SetRelation& r) {
  return SetRelation(
      "par(" + r.name() + ")",
      [r](const TermSet& a) {
        Successors out;
        parallel_families(r.proper_redexes(a), 0, {}, {}, false, a, out.states);
        return out;
      },
      {}, r.limits());
}

Strategy max_redexes(const SetRelation& r, PriorityFn p) {
  return Strategy([r, p = std::move(p)](const TermSet& a) {
    const std::vector<Redex> reds = r.proper_redexes(a);
    std::vector<std::uint64_t> prio;
    prio.reserve(reds.size());
    for (const Redex& red : reds) prio.push_back(p(red.lhs));
    std::vector<TermSet> out;
    for (std::size_t i = 0; i < reds.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < reds.size() && maximal; ++j) {
        if (j != i && reds[i].lhs.intersects(reds[j].lhs) && !(prio[i] > prio[j])) maximal = false;
      }
      if (maximal) out.push_back(reds[i].lhs);
    }
    return out;
  });
}

SetRelation sync_ext(const SetRelation& r, Strategy s) {
  return SetRelation(
      "sync(" + r.name() + ")",
      [r, s = std::move(s)](const TermSet& a) {
        Successors out;
        const std::vector<TermSet> chosen = s(a);
        if (chosen.empty()) return out;
        TermSet fired;
        std::vector<Family> reducts;
        for (const TermSet& b : chosen) {
          fired = set_union(fired, b);
          Successors succ = r.step(b);
          if (succ.states.empty()) return out;
          reducts.push_back(std::move(succ.states));
        }
        // Cartesian product over the reduct choices.
        Family partial{set_difference(a, fired)};
        for (const Family& options : reducts) {
          Family next;
          for (const TermSet& base : partial) {
            for (const TermSet& reduct : options) next.insert(set_union(base, reduct));
          }
          partial = std::move(next);
        }
        out.states = std::move(partial);
        return out;
      },
      {}, r.limits());
}

Family serialize(const SetRelation& r, const Strategy& s, const TermSet& a) {
  std::vector<TermSet> chosen = s(a);
  std::sort(chosen.begin(), chosen.end());
  TermSet fired;
  for (const TermSet& b : chosen) fired = set_union(fired, b);
  const TermSet untouched = set_difference(a, fired);

  Family results;
  std::vector<LogBook> work{LogBook{std::move(chosen), {}}};
  while (!work.empty()) {
    LogBook book = std::move(work.back());
    work.pop_back();
    if (book.pending.empty()) {
      results.insert(set_union(untouched, book.done));
      continue;
    }
    // ⟨a_i, c ; d⟩ → ⟨c ; a'_i, d⟩
    const TermSet head = book.pending.front();
    std::vector<TermSet> rest(book.pending.begin() + 1, book.pending.end());
    for (const TermSet& reduct : r.step(head).states) {
      work.push_back(LogBook{rest, set_union(book.done, reduct)});
    }
  }
  return results;
}

namespace kernels {

std::vector<std::size_t> reduct_counts_serial(const SetRelation& r, const TermSet& universe) {
  check_universe(r, universe);
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  std::vector<std::size_t> out(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out[mask] = r.step(universe.subset(mask)).states.size();
  return out;
}

std::vector<std::size_t> reduct_counts_omp(const SetRelation& r, const TermSet& universe) {
  check_universe(r, universe);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << universe.size());
  std::vector<std::size_t> out(static_cast<std::size_t>(count));
  std::exception_ptr failure;
  std::mutex failure_mu;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    try {
      out[static_cast<std::size_t>(mask)] =
          r.step(universe.subset(static_cast<std::uint64_t>(mask))).states.size();
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

bool is_deterministic_serial(const SetRelation& r, const TermSet& universe) {
  check_universe(r, universe);
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (r.step(universe.subset(mask)).states.size() > 1) return false;
  }
  return true;
}

bool is_deterministic_omp(const SetRelation& r, const TermSet& universe) {
  const std::vector<std::size_t> counts = reduct_counts_omp(r, universe);
  return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c <= 1; });
}

}  // namespace kernels

bool is_deterministic(const SetRelation& r, const TermSet& universe) {
  return kernels::is_deterministic_omp(r, universe);
}

std::string to_string(const Family& family) {
  std::string out = "{";
  bool first = true;
  for (const TermSet& s : family) {
    if (!first) out += ',';
    first = false;
    out += s.to_string();
  }
  out += '}';
  return out;
}

}  // namespace syncsem
