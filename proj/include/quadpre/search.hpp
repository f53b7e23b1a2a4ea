#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "quadpre/bigint.hpp"
#include "quadpre/dynamics.hpp"
#include "quadpre/error.hpp"
#include "quadpre/rat.hpp"
#include "quadpre/serialize.hpp"

namespace quadpre {

enum class Strategy { ThirdPair, Forward };

inline std::string to_string(Strategy s) { return s == Strategy::ThirdPair ? "thirdpair" : "forward"; }

inline Strategy parse_strategy(const std::string& s) {
  if (s == "thirdpair") return Strategy::ThirdPair;
  if (s == "forward") return Strategy::Forward;
  throw ContractViolation("unknown strategy '" + s + "'");
}

struct SearchConfig {
  Strategy strategy = Strategy::ThirdPair;
  unsigned long height_bound = 1;
  unsigned depth = 3;
  ArrangementSignature target{2, 4, 6};
  unsigned shard_index = 0;
  unsigned shard_total = 1;
  std::optional<std::string> checkpoint_path;
  bool resume = false;
  unsigned long checkpoint_every = 2000;  // outer candidates between checkpoint writes

  void validate() const {
    if (height_bound < 1) throw ContractViolation("search: height_bound must be >= 1");
    if (height_bound > (1UL << 31)) throw ContractViolation("search: height_bound too large");
    if (shard_total < 1 || shard_index >= shard_total) throw ContractViolation("search: shard must satisfy 0 <= i < T");
    if (depth < target.size()) throw ContractViolation("search: depth must be >= target length");
    if (strategy == Strategy::ThirdPair && target.size() < 3)
      throw ContractViolation("search: thirdpair needs a target of length >= 3");
    if (depth < 1) throw ContractViolation("search: depth must be >= 1");
  }
};

/// Canonical text of the fields that determine a scan's output.
inline std::string config_key(const SearchConfig& cfg) {
  std::ostringstream os;
  os << to_string(cfg.strategy) << "|H=" << cfg.height_bound << "|depth=" << cfg.depth << "|target=";
  for (std::size_t i = 0; i < cfg.target.size(); ++i) os << (i ? "," : "") << cfg.target[i];
  os << "|shard=" << cfg.shard_index << "/" << cfg.shard_total;
  return os.str();
}

/// 64-bit FNV-1a of config_key, hex.
inline std::string config_hash(const SearchConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config_key(cfg)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct Provenance {
  std::string strategy;
  std::vector<Rat> params;      // (p1, p2) or (c, x0)
  std::vector<BigInt> heights;  // of params
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SearchRecord {
  Rat c, a;
  ArrangementSignature signature;
  PreimageTree tree;
  std::vector<Provenance> provenance;
};

/// Record iff the tree of a under f_c dominates target component-wise.
inline std::optional<SearchRecord> verify_pair(const Rat& c, const Rat& a, const ArrangementSignature& target,
                                               unsigned depth) {
  if (depth < target.size()) throw ContractViolation("verify_pair: depth must be >= target length");
  PreimageTree tree = preimage_tree(c, a, depth);
  ArrangementSignature sig = signature(tree);
  if (!dominates(sig, target)) return std::nullopt;
  return SearchRecord{c, a, std::move(sig), std::move(tree), {}};
}

/// Nonnegative reduced fraction num/den.
struct Candidate {
  long num;
  long den;
  long height() const { return std::max(num, den); }
  Rat value() const { return Rat(BigInt(num), BigInt(den)); }
  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// All nonnegative reduced fractions of height <= H, by height and then by
/// value.
inline std::vector<Candidate> enumerate_candidates(unsigned long bound) {
  std::vector<Candidate> out;
  out.push_back({0, 1});
  out.push_back({1, 1});
  const long H = static_cast<long>(bound);
  for (long h = 2; h <= H; ++h) {
    for (long p = 1; p < h; ++p)
      if (std::gcd(p, h) == 1) out.push_back({p, h});
    for (long q = h - 1; q >= 1; --q)
      if (std::gcd(h, q) == 1) out.push_back({h, q});
  }
  return out;
}

/// Signed values of height <= H: 0, then v, -v for each positive candidate.
inline std::vector<Rat> signed_values(const std::vector<Candidate>& cands) {
  std::vector<Rat> out;
  for (const auto& c : cands) {
    Rat v = c.value();
    out.push_back(v);
    if (!v.is_zero()) out.push_back(-v);
  }
  return out;
}

namespace detail {

inline bool is_square_u128(unsigned __int128 n) {
  static const auto residues = [] {
    std::array<std::vector<bool>, 4> t;
    const std::array<unsigned, 4> mods{64, 63, 65, 11};
    for (std::size_t k = 0; k < 4; ++k) {
      t[k].assign(mods[k], false);
      for (unsigned x = 0; x < mods[k]; ++x) t[k][(x * x) % mods[k]] = true;
    }
    return t;
  }();
  if (!residues[0][static_cast<unsigned>(n & 63U)]) return false;
  if (!residues[1][static_cast<unsigned>(n % 63U)]) return false;
  if (!residues[2][static_cast<unsigned>(n % 65U)]) return false;
  if (!residues[3][static_cast<unsigned>(n % 11U)]) return false;
  auto s = static_cast<unsigned long long>(std::sqrt(static_cast<long double>(n)));
  using U = unsigned __int128;
  while (s > 0 && static_cast<U>(s) * s > n) --s;
  while (static_cast<U>(s + 1) * (s + 1) <= n) ++s;
  return static_cast<U>(s) * s == n;
}

// n / d with every prime p = 1 (mod 4) removed.
inline long denominator_key(long d, const std::vector<long>& spf) {
  long key = 1;
  while (d > 1) {
    long p = spf[static_cast<std::size_t>(d)];
    d /= p;
    if (p % 4 != 1) key *= p;
  }
  return key;
}

inline std::vector<long> smallest_prime_factors(long n) {
  std::vector<long> spf(static_cast<std::size_t>(n + 1), 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (long j = i; j <= n; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
  }
  return spf;
}

// 4 d^2 e^2 (x^2 e^2 + y^2 d^2) - (x^2 e^2 - y^2 d^2)^2 >= 0 and a square,
// for x = a/d and y = b/e.
inline bool second_level_square(const Candidate& p, const Candidate& q, bool small) {
  if (small) {
    using I = __int128;
    I A = static_cast<I>(p.num) * p.num * q.den * q.den;
    I B = static_cast<I>(q.num) * q.num * p.den * p.den;
    I DE = static_cast<I>(p.den) * p.den * q.den * q.den;
    I diff = A - B;
    I n = 4 * DE * (A + B) - diff * diff;
    if (n < 0) return false;
    return is_square_u128(static_cast<unsigned __int128>(n));
  }
  BigInt a(p.num), d(p.den), b(q.num), e(q.den);
  BigInt A = a * a * e * e, B = b * b * d * d;
  BigInt n = 4 * d * d * e * e * (A + B) - (A - B) * (A - B);
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// y-range allowed by 4(x^2 + y^2) - (x^2 - y^2)^2 >= 0, widened slightly.
inline std::pair<double, double> second_level_window(double x) {
  const double root = 2.0 * std::sqrt(2.0 * x * x + 1.0);
  const double lo = x * x + 2.0 - root;
  const double hi = x * x + 2.0 + root;
  const double ylo = lo > 0 ? std::sqrt(lo) : 0.0;
  const double yhi = std::sqrt(hi);
  const double slack = 1e-9 * (1.0 + yhi);
  return {ylo - slack, yhi + slack};
}

}  // namespace detail

inline json provenance_json(const Provenance& p) {
  json params = json::array(), heights = json::array();
  for (const auto& v : p.params) params.push_back(rat_json(v));
  for (const auto& h : p.heights) heights.push_back(h.get_str());
  return {{"strategy", p.strategy}, {"params", params}, {"heights", heights}};
}

inline Provenance provenance_from_json(const json& j) {
  Provenance p{j.at("strategy").get<std::string>(), {}, {}};
  for (const auto& v : j.at("params")) p.params.push_back(rat_from_json(v));
  for (const auto& h : j.at("heights")) p.heights.emplace_back(h.get<std::string>());
  return p;
}

inline json record_json(const SearchRecord& r) {
  json prov = json::array();
  for (const auto& p : r.provenance) prov.push_back(provenance_json(p));
  return {{"c", rat_json(r.c)},
          {"a", rat_json(r.a)},
          {"signature", signature_json(r.signature)},
          {"witness", tree_json(r.tree)},
          {"provenance", prov}};
}

inline SearchRecord record_from_json(const json& j) {
  SearchRecord r{rat_from_json(j.at("c")), rat_from_json(j.at("a")),
                 j.at("signature").get<ArrangementSignature>(), tree_from_json(j.at("witness")), {}};
  for (const auto& p : j.at("provenance")) r.provenance.push_back(provenance_from_json(p));
  return r;
}

struct SearchStats {
  std::size_t candidates = 0;
  std::uint64_t pairs_tested = 0;
  std::size_t resumed_from = 0;  // outer index a resumed scan started at
  bool pruned = false;
};

struct SearchResult {
  std::vector<SearchRecord> records;
  SearchStats stats;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

namespace detail {

/// Records deduplicated by (c, a) in first-discovery order.
class RecordSet {
 public:
  void add(SearchRecord r) {
    auto key = std::make_pair(r.c, r.a);
    auto it = index_.find(key);
    if (it == index_.end()) {
      index_.emplace(std::move(key), records_.size());
      records_.push_back(std::move(r));
      return;
    }
    auto& prov = records_[it->second].provenance;
    for (auto& p : r.provenance)
      if (std::find(prov.begin(), prov.end(), p) == prov.end()) prov.push_back(std::move(p));
  }
  const std::vector<SearchRecord>& records() const { return records_; }
  std::vector<SearchRecord> take() { return std::move(records_); }

 private:
  std::vector<SearchRecord> records_;
  std::map<std::pair<Rat, Rat>, std::size_t> index_;
};

inline void write_checkpoint(const SearchConfig& cfg, std::size_t next_index, const RecordSet& set) {
  const std::string& path = *cfg.checkpoint_path;
  json recs = json::array();
  for (const auto& r : set.records()) recs.push_back(record_json(r));
  json doc = {{"strategy", to_string(cfg.strategy)},
              {"config", config_key(cfg)},
              {"config_hash", config_hash(cfg)},
              {"next_index", next_index},
              {"emitted_count", set.records().size()},
              {"records", std::move(recs)}};
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot open checkpoint file " + tmp);
    out << doc.dump() << "\n";
    out.flush();
    if (!out) throw CheckpointError("cannot write checkpoint file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place at " + path + ": " + ec.message());
}

inline std::size_t load_checkpoint(const SearchConfig& cfg, RecordSet& set) {
  const std::string& path = *cfg.checkpoint_path;
  std::ifstream in(path);
  if (!in) return cfg.shard_index;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw CheckpointError("unreadable checkpoint " + path + ": " + e.what());
  }
  if (doc.value("strategy", "") != to_string(cfg.strategy) || doc.value("config_hash", "") != config_hash(cfg))
    throw CheckpointError("checkpoint " + path + " was written for a different configuration (" +
                          doc.value("config", std::string("?")) + ")");
  for (const auto& r : doc.at("records")) set.add(record_from_json(r));
  if (set.records().size() != doc.at("emitted_count").get<std::size_t>())
    throw CheckpointError("checkpoint " + path + " record count mismatch");
  return doc.at("next_index").get<std::size_t>();
}

// Drives the outer loop over one shard with checkpointing.
template <class Body>
SearchResult run_shard(const SearchConfig& cfg, std::size_t outer_count, SearchStats stats, Body&& body,
                       const ProgressFn& progress) {
  RecordSet set;
  std::size_t start = cfg.shard_index;
  if (cfg.checkpoint_path && cfg.resume) start = load_checkpoint(cfg, set);
  stats.resumed_from = start;
  std::size_t since = 0;
  for (std::size_t i = start; i < outer_count; i += cfg.shard_total) {
    body(i, set, stats);
    if (cfg.checkpoint_path && ++since >= cfg.checkpoint_every) {
      write_checkpoint(cfg, i + cfg.shard_total, set);
      since = 0;
    }
    if (progress) progress(i + 1, outer_count);
  }
  if (cfg.checkpoint_path) write_checkpoint(cfg, std::max(start, outer_count), set);
  return {set.take(), stats};
}

inline Provenance thirdpair_provenance(const Candidate& p, const Candidate& q) {
  return {"thirdpair", {p.value(), q.value()}, {BigInt(p.height()), BigInt(q.height())}};
}

inline void try_thirdpair(const Candidate& p, const Candidate& q, const SearchConfig& cfg, RecordSet& set) {
  const Rat X = p.value() * p.value();
  const Rat Y = q.value() * q.value();
  const Rat c = -(X + Y) / Rat(2);
  const Rat s = (X - Y) / Rat(2);
  const Rat t = s * s + c;
  const Rat a = t * t + c;
  if (auto rec = verify_pair(c, a, cfg.target, cfg.depth)) {
    rec->provenance.push_back(thirdpair_provenance(p, q));
    set.add(std::move(*rec));
  }
}

}  // namespace detail

/// Pairs (p1, p2) of candidate third pre-images with p1^2 + c = s and
/// p2^2 + c = -s, so c = -(p1^2 + p2^2)/2, t = s^2 + c, a = t^2 + c.
///
/// When the target asks for at least three second pre-images, -t - c must
/// be a rational square as well, i.e. 4(X + Y) - (X - Y)^2 = square with
/// X = p1^2, Y = p2^2. Clearing denominators d, e of p1, p2 shows that d and
/// e then agree at 2 and at every prime = 3 (mod 4), so only candidates
/// with equal reduced keys are paired, and only inside the window where the
/// expression is nonnegative. Both filters are necessary conditions; every
/// hit is still confirmed by verify_pair.
inline SearchResult scan_thirdpair(const SearchConfig& cfg, const ProgressFn& progress = {}) {
  cfg.validate();
  if (cfg.strategy != Strategy::ThirdPair) throw ContractViolation("scan_thirdpair: wrong strategy in config");
  const auto cands = enumerate_candidates(cfg.height_bound);
  SearchStats stats;
  stats.candidates = cands.size();
  const bool prune = cfg.target.size() >= 2 && cfg.target[1] >= 3;
  stats.pruned = prune;

  if (!prune) {
    auto body = [&](std::size_t i, detail::RecordSet& set, SearchStats& st) {
      for (std::size_t j = i; j < cands.size(); ++j) {
        ++st.pairs_tested;
        detail::try_thirdpair(cands[i], cands[j], cfg, set);
      }
    };
    return detail::run_shard(cfg, cands.size(), stats, body, progress);
  }

  const auto spf = detail::smallest_prime_factors(static_cast<long>(cfg.height_bound));
  std::map<long, std::vector<std::pair<double, std::uint32_t>>> groups;
  std::vector<long> keys(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    keys[i] = detail::denominator_key(cands[i].den, spf);
    groups[keys[i]].emplace_back(cands[i].approx(), static_cast<std::uint32_t>(i));
  }
  for (auto& [k, g] : groups) std::sort(g.begin(), g.end());
  const bool small = cfg.height_bound <= 40000;

  auto body = [&](std::size_t i, detail::RecordSet& set, SearchStats& st) {
    const auto& group = groups.at(keys[i]);
    auto [lo, hi] = detail::second_level_window(cands[i].approx());
    auto first = std::lower_bound(group.begin(), group.end(), std::make_pair(lo, std::uint32_t{0}));
    std::vector<std::uint32_t> hits;
    for (auto it = first; it != group.end() && it->first <= hi; ++it) {
      if (it->second < i) continue;
      ++st.pairs_tested;
      if (detail::second_level_square(cands[i], cands[it->second], small)) hits.push_back(it->second);
    }
    std::sort(hits.begin(), hits.end());
    for (auto j : hits) detail::try_thirdpair(cands[i], cands[j], cfg, set);
  };
  return detail::run_shard(cfg, cands.size(), stats, body, progress);
}

/// (c, x0) with c signed and x0 >= 0 of height <= H; a = f_c^depth(x0).
inline SearchResult scan_forward(const SearchConfig& cfg, const ProgressFn& progress = {}) {
  cfg.validate();
  if (cfg.strategy != Strategy::Forward) throw ContractViolation("scan_forward: wrong strategy in config");
  const auto cands = enumerate_candidates(cfg.height_bound);
  const auto cs = signed_values(cands);
  std::vector<Rat> xs;
  for (const auto& k : cands) xs.push_back(k.value());
  SearchStats stats;
  stats.candidates = cs.size();
  auto body = [&](std::size_t i, detail::RecordSet& set, SearchStats& st) {
    const Rat& c = cs[i];
    for (const auto& x0 : xs) {
      ++st.pairs_tested;
      Rat a = iterate(c, x0, cfg.depth);
      if (auto rec = verify_pair(c, a, cfg.target, cfg.depth)) {
        rec->provenance.push_back({"forward", {c, x0}, {height(c), height(x0)}});
        set.add(std::move(*rec));
      }
    }
  };
  return detail::run_shard(cfg, cs.size(), stats, body, progress);
}

inline SearchResult run_search(const SearchConfig& cfg, const ProgressFn& progress = {}) {
  return cfg.strategy == Strategy::ThirdPair ? scan_thirdpair(cfg, progress) : scan_forward(cfg, progress);
}

/// Union over shards by (c, a) with provenances merged, sorted by (c, a).
inline std::vector<SearchRecord> merge_shards(std::vector<std::vector<SearchRecord>> shards) {
  detail::RecordSet set;
  for (auto& shard : shards)
    for (auto& r : shard) set.add(std::move(r));
  auto out = set.take();
  std::sort(out.begin(), out.end(), [](const SearchRecord& x, const SearchRecord& y) {
    return std::tie(x.c, x.a) < std::tie(y.c, y.a);
  });
  return out;
}

/// Splits shard i/T into `jobs` sub-shards (i + T k)/(T jobs), runs them on
/// separate threads and merges. Sub-shard checkpoints go to PATH.partK.
inline SearchResult run_search_parallel(const SearchConfig& cfg, unsigned jobs) {
  cfg.validate();
  if (jobs <= 1) return run_search(cfg);
  std::vector<SearchResult> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < jobs; ++k) {
    SearchConfig sub = cfg;
    sub.shard_index = cfg.shard_index + cfg.shard_total * k;
    sub.shard_total = cfg.shard_total * jobs;
    if (cfg.checkpoint_path) sub.checkpoint_path = *cfg.checkpoint_path + ".part" + std::to_string(k);
    pool.emplace_back([sub, k, &parts, &errors] {
      try {
        parts[k] = run_search(sub);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  SearchResult out;
  std::vector<std::vector<SearchRecord>> shards;
  for (auto& p : parts) {
    out.stats.candidates = p.stats.candidates;
    out.stats.pairs_tested += p.stats.pairs_tested;
    out.stats.pruned = p.stats.pruned;
    shards.push_back(std::move(p.records));
  }
  out.records = merge_shards(std::move(shards));
  return out;
}

}  // namespace quadpre
