#include "cclab/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cclab {

std::string ASet::canonical_serialization() const {
  std::string out;
  for (const BitString& y : members) {
    out += y.display();
    out += '\n';
  }
  return out;
}

std::string IncompressibleFraction::str() const {
  std::ostringstream os;
  os << count << "/2^" << length;
  return os.str();
}

void Oracle::ensure_runs(std::size_t max_len) {
  for (int len = runs_len_ + 1; len <= static_cast<int>(max_len); ++len) {
    runs_.reserve((2ull << len) - 1);
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      ExecResult r = u_eval(BitString::from_index(static_cast<std::size_t>(len), v));
      runs_.push_back(RunRecord{std::move(r.output), r.steps});
    }
    runs_len_ = len;
  }
}

void Oracle::ensure_producers(std::size_t max_len) {
  ensure_runs(max_len);
  for (int len = producers_len_ + 1; len <= static_cast<int>(max_len); ++len) {
    std::uint64_t first = (1ull << len) - 1;
    for (std::uint64_t v = 0; v < (1ull << len); ++v) {
      std::uint64_t rank = first + v;
      const RunRecord& rec = runs_[rank];
      auto& frontier = producers_[rec.output];
      if (frontier.empty() || rec.steps < frontier.back().steps) {
        frontier.push_back(FrontierEntry{rank, rec.steps});
      }
    }
    producers_len_ = len;
  }
}

Oracle::RunResult Oracle::run(const BitString& s) {
  if (s.size() > 20 && static_cast<int>(s.size()) > runs_len_) {
    ExecResult r = u_eval(s);
    return RunResult{std::move(r.output), r.steps};
  }
  ensure_runs(s.size());
  const RunRecord& rec = runs_[s.shortlex_rank()];
  return RunResult{rec.output, rec.steps};
}

std::optional<Oracle::Producer> Oracle::first_producer(const BitString& x, std::size_t max_len,
                                                       std::optional<std::uint64_t> budget) {
  ensure_producers(max_len);
  auto it = producers_.find(x);
  if (it == producers_.end()) return std::nullopt;
  std::uint64_t rank_bound = (2ull << max_len) - 1;
  for (const FrontierEntry& e : it->second) {
    if (e.rank >= rank_bound) break;
    if (!budget || e.steps <= *budget) {
      return Producer{BitString::from_rank(e.rank), e.steps};
    }
  }
  return std::nullopt;
}

ComplexityRecord Oracle::complexity(const BitString& x) {
  if (x.size() > ceilings_.complexity_max_len) {
    throw RefusalError("oracle: C(x) ceiling is |x| <= " + std::to_string(ceilings_.complexity_max_len));
  }
  auto p = first_producer(x, x.size() + 2, std::nullopt);
  // The Print program "00"+x guarantees a producer within the scan bound.
  ComplexityRecord rec;
  rec.x = x;
  rec.value = p->program.size();
  rec.witness = std::move(p->program);
  return rec;
}

ComplexityRecord Oracle::complexity_time_bounded(const BitString& x, std::uint64_t budget) {
  if (x.size() > ceilings_.complexity_max_len) {
    throw RefusalError("oracle: C^t(x) ceiling is |x| <= " + std::to_string(ceilings_.complexity_max_len));
  }
  ComplexityRecord rec;
  rec.x = x;
  rec.step_budget = budget;
  if (auto p = first_producer(x, x.size() + 2, budget)) {
    rec.value = p->program.size();
    rec.witness = std::move(p->program);
    return rec;
  }
  // Nothing within the Print bound halts inside the budget; report Print,
  // flagged, so the value stays the |x|+2 upper bound.
  BitString print = BitString::parse("00");
  print.append(x);
  rec.value = print.size();
  rec.witness = std::move(print);
  rec.exceeds_budget = true;
  return rec;
}

BBRecord Oracle::busy_beaver(std::size_t m) {
  if (m > ceilings_.bb_max_m) {
    throw RefusalError("oracle: BB(m) ceiling is m <= " + std::to_string(ceilings_.bb_max_m));
  }
  ensure_runs(m);
  BBRecord rec;
  rec.m = m;
  std::uint64_t best_rank = 0;
  for (std::uint64_t rank = 0; rank < (2ull << m) - 1; ++rank) {
    if (runs_[rank].steps > rec.bb) {
      rec.bb = runs_[rank].steps;
      best_rank = rank;
    }
  }
  rec.p_m = BitString::from_rank(best_rank);
  return rec;
}

ASet Oracle::a_set(std::uint64_t s, std::size_t len) {
  if (len > ceilings_.aset_max_len) {
    throw RefusalError("oracle: A-set ceiling is length <= " + std::to_string(ceilings_.aset_max_len));
  }
  ASet out;
  out.s = s;
  out.len = len;
  std::vector<bool> produced(1ull << len, false);
  if (len > 0) {
    ensure_runs(len - 1);
    for (std::uint64_t rank = 0; rank < (1ull << len) - 1; ++rank) {  // all programs shorter than len
      const RunRecord& rec = runs_[rank];
      if (rec.steps <= s && rec.output.size() == len) {
        produced[rec.output.to_index()] = true;
      }
    }
  }
  for (std::uint64_t v = 0; v < (1ull << len); ++v) {
    if (!produced[v]) out.members.push_back(BitString::from_index(len, v));
  }
  return out;
}

std::vector<BitString> Oracle::random_strings(std::size_t len) {
  if (len > ceilings_.random_max_len) {
    throw RefusalError("oracle: random-strings ceiling is length <= " + std::to_string(ceilings_.random_max_len));
  }
  std::vector<BitString> out;
  for (std::uint64_t v = 0; v < (1ull << len); ++v) {
    BitString y = BitString::from_index(len, v);
    if (complexity(y).value >= len) out.push_back(std::move(y));
  }
  return out;
}

IncompressibleFraction Oracle::incompressible_fraction(std::size_t n) {
  IncompressibleFraction f;
  f.count = random_strings(n).size();
  f.length = n;
  return f;
}

void Oracle::save_cache(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
  out << "cclab-run-cache v1\n";
  for (std::uint64_t rank = 0; rank < runs_.size(); ++rank) {
    out << BitString::from_rank(rank).display() << '\t' << runs_[rank].output.display() << '\t'
        << runs_[rank].steps << '\n';
  }
}

void Oracle::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  std::string header;
  std::getline(in, header);
  if (header != "cclab-run-cache v1") {
    throw std::runtime_error("unrecognized cache header: " + header);
  }
  std::vector<RunRecord> loaded;
  std::string line;
  std::uint64_t rank = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw std::runtime_error("malformed cache line: " + line);
    }
    BitString program = BitString::parse(line.substr(0, t1));
    if (program.shortlex_rank() != rank) {
      throw std::runtime_error("cache lines out of shortlex order at: " + line);
    }
    loaded.push_back(RunRecord{BitString::parse(line.substr(t1 + 1, t2 - t1 - 1)),
                               std::stoull(line.substr(t2 + 1))});
    ++rank;
  }
  // Keep only whole lengths so the covered-prefix invariant holds.
  int len = -1;
  while ((2ull << (len + 1)) - 1 <= loaded.size()) ++len;
  loaded.resize(len >= 0 ? (2ull << len) - 1 : 0);
  runs_ = std::move(loaded);
  runs_len_ = len;
  producers_.clear();
  producers_len_ = -1;
}

}  // namespace cclab
