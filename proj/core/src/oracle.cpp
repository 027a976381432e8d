#include "zdisk/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

namespace zdisk {

void OracleConfig::validate() const {
  if (degree_bound < 1 || coeff_bound < 1 || shift_bound < 1) {
    throw Error(Errc::invalid_argument, "oracle bounds must be >= 1");
  }
  // Keeps the machine-integer fast path exact; the search box would be
  // astronomically large before these bounds bind.
  if (degree_bound > 12 || coeff_bound > 1'000'000) {
    throw Error(Errc::invalid_argument, "oracle bounds out of supported range");
  }
}

bool divides_exactly(const AlexanderPoly& delta, const LaurentPoly& q) {
  return q.divided_by(delta.poly()).has_value();
}

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// Enumerates one slice of the coefficient box (fixing the first coefficient)
// entirely in machine integers, falling back to exact big-integer division
// when an intermediate value would overflow.
struct Partial {
  i128 alt = 0;  // p(-1)
  i64 a2 = 0;    // 2^D * p(2)
  i64 b2 = 0;    // 2^D * p(1/2)
  i64 am2 = 0;   // (-2)^D * p(-2)   up to the fixed power convention below
  i64 bm2 = 0;   // (-2)^D * p(-1/2)
};

struct BoxSearch {
  i64 n;
  int D, C;
  int width;                 // 2D + 1
  i128 disc;                 // 4n + 1
  i64 modulus_two;           // odd part of |n - 2|   (2*delta(2) = n - 2... see filters)
  i64 modulus_minus_two;     // odd part of |9n + 2|
  i64 four_pow_d;
  std::vector<i64> pow2, powm2;  // 2^i and (-2)^i for i = 0..2D
  std::vector<i64> coeff;        // c[i] is the coefficient of t^(i - D)
  std::vector<i64> conv;         // scratch: coefficients of p * involute(p) - 1
  const AlexanderPoly* delta_big;
  std::vector<LaurentPoly> found;

  BoxSearch(i64 n_, int D_, int C_, const AlexanderPoly* delta)
      : n(n_), D(D_), C(C_), width(2 * D_ + 1), disc(i128(4) * n_ + 1),
        coeff(width, 0), conv(4 * D_ + 1, 0), delta_big(delta) {
    modulus_two = n >= 2 ? n - 2 : 2 - n;
    modulus_minus_two = 9 * n + 2 >= 0 ? 9 * n + 2 : -(9 * n + 2);
    four_pow_d = 1;
    for (int i = 0; i < D; ++i) four_pow_d *= 4;
    pow2.resize(2 * D + 1);
    powm2.resize(2 * D + 1);
    pow2[0] = powm2[0] = 1;
    for (int i = 1; i <= 2 * D; ++i) {
      pow2[i] = 2 * pow2[i - 1];
      powm2[i] = -2 * powm2[i - 1];
    }
  }

  // Necessary conditions from evaluating p * involute(p) - 1 = delta * r at
  // rational points:
  //   t = -1:  p(-1)^2 - 1 = -(4n+1) r(-1), so p(-1)^2 = 1 mod (4n+1);
  //   t =  2:  with A = 2^D p(2), B = 2^D p(1/2) (integers), A*B - 4^D equals
  //            (n-2) * 2^(2D-1) r(2), an (n-2)-multiple -- and 0 when n = 2,
  //            where t = 2 is a root of delta;
  //   t = -2:  same shape with modulus 9n+2.
  bool value_filters(const Partial& s) const {
    i128 m = disc < 0 ? -disc : disc;
    if ((s.alt * s.alt - 1) % m != 0) return false;
    if (n == 2) {
      if (s.a2 * s.b2 != four_pow_d) return false;
    } else if (modulus_two > 1) {
      if (((i128)s.a2 * s.b2 - four_pow_d) % modulus_two != 0) return false;
    }
    if (modulus_minus_two > 1) {
      if (((i128)s.am2 * s.bm2 - four_pow_d) % modulus_minus_two != 0) return false;
    }
    return true;
  }

  bool divisible_i64() {
    const int top = 4 * D;
    // conv = coefficients of p * involute(p), exponent k - 2D at index k.
    for (int k = 0; k <= top; ++k) {
      i64 s = 0;
      int shift = k - 2 * D;
      int lo = std::max(0, shift), hi = std::min(width - 1, width - 1 + shift);
      for (int j = lo; j <= hi; ++j) s += coeff[j] * coeff[j - shift];
      conv[k] = s;
    }
    conv[2 * D] -= 1;
    // Divide by n*t^2 - (2n+1)*t + n from the top; every leading coefficient
    // must be an exact multiple of n.
    for (int pos = top; pos >= 2; --pos) {
      i64 lead = conv[pos];
      if (lead == 0) continue;
      if (lead % n != 0) return false;
      i64 f = lead / n;
      conv[pos] = 0;
      i64 prod;
      if (__builtin_mul_overflow(f, 2 * n + 1, &prod) ||
          __builtin_add_overflow(conv[pos - 1], prod, &conv[pos - 1])) {
        return divisible_big();
      }
      if (__builtin_mul_overflow(f, n, &prod) ||
          __builtin_sub_overflow(conv[pos - 2], prod, &conv[pos - 2])) {
        return divisible_big();
      }
    }
    return conv[0] == 0 && conv[1] == 0;
  }

  bool divisible_big() {
    LaurentPoly p = current_poly();
    LaurentPoly q = p * p.involute() - LaurentPoly::one();
    return divides_exactly(*delta_big, q);
  }

  LaurentPoly current_poly() const {
    LaurentPoly::Terms terms;
    for (int i = 0; i < width; ++i) {
      if (coeff[i] != 0) terms[i - D] = coeff[i];
    }
    return LaurentPoly(std::move(terms));
  }

  Partial advance(const Partial& s, int idx, i64 c) const {
    Partial t = s;
    int parity = ((idx - D) % 2 == 0) ? 1 : -1;
    t.alt += parity * (i128)c;
    t.a2 += c * pow2[idx];
    t.b2 += c * pow2[2 * D - idx];
    t.am2 += c * powm2[idx];
    t.bm2 += c * powm2[2 * D - idx];
    return t;
  }

  void recurse(int idx, const Partial& s) {
    if (idx == width) {
      if (!value_filters(s)) return;
      if (divisible_i64()) found.push_back(current_poly());
      return;
    }
    for (i64 c = -C; c <= C; ++c) {
      coeff[idx] = c;
      recurse(idx + 1, advance(s, idx, c));
    }
    coeff[idx] = 0;
  }

  void run_first(i64 c0) {
    coeff[0] = c0;
    recurse(1, advance(Partial{}, 0, c0));
  }
};

// Arithmetic in Q[t]/(delta_n): elements a0 + a1*tau with
// tau^2 = ((2n+1)/n) tau - 1 and tau^{-1} = (2n+1)/n - tau.
struct TauRing {
  Rat twon1_over_n;
  std::map<std::int64_t, std::pair<Rat, Rat>> tau_powers;

  explicit TauRing(i64 n) : twon1_over_n(Rat(2 * Int(n) + 1) / Int(n)) {
    tau_powers[0] = {1, 0};
    tau_powers[1] = {0, 1};
    tau_powers[-1] = {twon1_over_n, -1};
  }

  std::pair<Rat, Rat> mul(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) const {
    Rat cross = a.second * b.second;
    return {a.first * b.first - cross,
            a.first * b.second + a.second * b.first + cross * twon1_over_n};
  }

  const std::pair<Rat, Rat>& tau_pow(std::int64_t e) {
    auto it = tau_powers.find(e);
    if (it != tau_powers.end()) return it->second;
    std::int64_t step = e > 0 ? 1 : -1;
    auto val = tau_pow(e - step);
    tau_powers[e] = mul(val, tau_powers[step]);
    return tau_powers[e];
  }

  std::pair<Rat, Rat> reduce(const LaurentPoly& p) {
    std::pair<Rat, Rat> acc{0, 0};
    for (const auto& [e, c] : p.terms()) {
      const auto& tp = tau_pow(e);
      acc.first += Rat(c) * tp.first;
      acc.second += Rat(c) * tp.second;
    }
    return acc;
  }
};

std::string tau_key(const std::pair<Rat, Rat>& v) {
  return rat_str(v.first) + "|" + rat_str(v.second);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<LaurentPoly> enumerate_unitary(std::int64_t n, const OracleConfig& cfg) {
  cfg.validate();
  if (n == 0) throw Error(Errc::invalid_argument, "enumerate_unitary requires n != 0");
  if (n > 1'000'000'000'000'000'000LL || n < -1'000'000'000'000'000'000LL) {
    throw Error(Errc::invalid_argument, "enumerate_unitary: |n| out of supported range");
  }
  const int D = cfg.degree_bound, C = cfg.coeff_bound;
  AlexanderPoly delta = delta_n(n);

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<i64> firsts;
  for (i64 c = -C; c <= C; ++c) firsts.push_back(c);
  std::vector<std::vector<LaurentPoly>> results(firsts.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= firsts.size()) return;
      BoxSearch search(n, D, C, &delta);
      search.run_first(firsts[i]);
      results[i] = std::move(search.found);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<LaurentPoly> out;
  for (auto& slice : results) {
    out.insert(out.end(), std::make_move_iterator(slice.begin()),
               std::make_move_iterator(slice.end()));
  }
  std::sort(out.begin(), out.end(), LaurentPoly::struct_less);
  return out;
}

OracleResult count_classes(const std::vector<LaurentPoly>& units, std::int64_t n,
                           const OracleConfig& cfg, std::optional<int> expected_finite_count) {
  cfg.validate();
  if (n == 0) throw Error(Errc::invalid_argument, "count_classes requires n != 0");
  OracleResult result;
  result.n = n;
  result.config = cfg;
  result.unit_count = units.size();

  AlexanderPoly delta = delta_n(n);
  TauRing ring(n);

  // Units sharing a residue in Q[t]/(delta) are literally equal in the ring,
  // so the shift/sign probing only needs to run once per distinct residue.
  // The minimal representative of a residue is the first unit mapping to it
  // when the units are scanned in canonical order.
  std::vector<LaurentPoly> sorted_units;
  const std::vector<LaurentPoly>* scan = &units;
  if (!std::is_sorted(units.begin(), units.end(), LaurentPoly::struct_less)) {
    sorted_units = units;
    std::sort(sorted_units.begin(), sorted_units.end(), LaurentPoly::struct_less);
    scan = &sorted_units;
  }
  std::vector<std::pair<Rat, Rat>> residues;
  std::vector<LaurentPoly> residue_rep;
  std::unordered_map<std::string, int> residue_index;
  for (const LaurentPoly& p : *scan) {
    auto phi = ring.reduce(p);
    auto [it, inserted] = residue_index.emplace(tau_key(phi), (int)residues.size());
    if (inserted) {
      residues.push_back(std::move(phi));
      residue_rep.push_back(p);
    }
  }

  UnionFind uf(residues.size());
  for (size_t i = 0; i < residues.size(); ++i) {
    // Probe all shifted/signed images against the other residues; every hit
    // is re-verified by exact polynomial divisibility.
    for (std::int64_t j = -cfg.shift_bound; j <= cfg.shift_bound; ++j) {
      auto shifted = ring.mul(residues[i], ring.tau_pow(j));
      for (int sign : {1, -1}) {
        if (sign < 0 && cfg.mode != ShiftMode::plus_minus_t) break;
        auto key = tau_key(sign > 0 ? shifted
                                    : std::make_pair(Rat(-shifted.first), Rat(-shifted.second)));
        auto it = residue_index.find(key);
        if (it == residue_index.end() || it->second == (int)i) continue;
        LaurentPoly diff =
            residue_rep[i].shifted(j) * LaurentPoly::constant(sign) - residue_rep[it->second];
        if (!divides_exactly(delta, diff)) {
          throw Error(Errc::invalid_argument, "internal: residue collision failed verification");
        }
        uf.unite((int)i, it->second);
      }
    }
  }

  std::map<int, LaurentPoly> reps;
  for (size_t i = 0; i < residues.size(); ++i) {
    int root = uf.find((int)i);
    auto it = reps.find(root);
    if (it == reps.end()) {
      reps.emplace(root, residue_rep[i]);
    } else if (LaurentPoly::struct_less(residue_rep[i], it->second)) {
      it->second = residue_rep[i];
    }
  }
  for (auto& [root, rep] : reps) result.classes.push_back(rep);
  std::sort(result.classes.begin(), result.classes.end(), LaurentPoly::struct_less);

  result.complete_within_bounds =
      expected_finite_count && (size_t)*expected_finite_count == result.classes.size();
  return result;
}

}  // namespace zdisk
