#include "ffheight/northcott.hpp"

#include <algorithm>
#include <array>

namespace ffheight {

namespace {

long long monic_count(long long q, int D) {
  long long total = 0, pw = 1;
  for (int k = 0; k <= D; ++k) { total += pw; pw *= q; }
  return total;
}

// Indices of all monic polynomials of degree 0..D in the dense table of
// polynomials of degree <= D (index = base-q digit vector).
std::vector<long long> monic_indices(const FqCtx& F, int D) {
  std::vector<long long> out;
  for (int k = 0; k <= D; ++k) {
    long long lead = ipow(F.q(), k);  // + 1 * q^k
    long long count = (k == 0) ? 1 : lead;
    for (long long low = 0; low < count; ++low) out.push_back(lead + low);
  }
  return out;
}

struct DegreeTables {
  std::vector<TPoly> poly;    // index -> polynomial
  std::vector<int> deg;       // index -> degree (-1 for 0)
  std::vector<std::uint64_t> primemask;  // bit per irreducible divisor
  bool masks_valid = false;
};

DegreeTables build_tables(const FqCtx& F, int D) {
  long long N = ipow(F.q(), D + 1);
  DegreeTables T;
  T.poly.reserve(N);
  T.deg.reserve(N);
  for (long long i = 0; i < N; ++i) {
    T.poly.push_back(tpoly_from_index(F, i, D + 1));
    T.deg.push_back(T.poly.back().deg());
  }
  // Irreducibles of degree <= D, for O(1) content screening. The zero
  // polynomial is "divisible by everything".
  std::vector<TPoly> irred;
  for (int k = 1; k <= D && irred.size() <= 64; ++k)
    for (const TPoly& g : monic_polys_of_degree(F, k))
      if (is_irreducible(g)) irred.push_back(g);
  if (irred.size() <= 64) {
    T.primemask.assign(N, 0);
    for (long long i = 0; i < N; ++i) {
      if (i == 0) { T.primemask[i] = ~0ULL; continue; }
      for (std::size_t b = 0; b < irred.size(); ++b)
        if ((T.poly[i] % irred[b]).is_zero()) T.primemask[i] |= 1ULL << b;
    }
    T.masks_valid = true;
  }
  return T;
}

// Content == 1 test for decoded coefficient indices (zero-extended by the
// caller). Falls back to gcd folding when prime masks are unavailable.
bool content_is_one(const DegreeTables& T, const std::array<long long, 4>& idx,
                    int count) {
  if (T.masks_valid) {
    std::uint64_t acc = ~0ULL;
    for (int i = 0; i < count; ++i) acc &= T.primemask[idx[i]];
    return acc == 0;
  }
  const TPoly* nonzero = nullptr;
  TPoly g;
  for (int i = 0; i < count; ++i) {
    if (idx[i] == 0) continue;
    if (!nonzero) { nonzero = &T.poly[idx[i]]; g = *nonzero; continue; }
    g = poly_gcd(g, T.poly[idx[i]]);
    if (g.deg() == 0) return true;
  }
  return nonzero != nullptr && g.deg() == 0;
}

// Mark every product (s X - r) * (cofactor) inside the coefficient box as
// reducible. Complete: the maximum coefficient degree is additive on
// products (the Gauss norm at infinity is multiplicative), so a reducible
// degree-delta candidate with coefficients of degree <= D always splits as a
// primitive linear factor and a cofactor that both stay inside the box.
std::vector<bool> build_reducible_set(const FqCtx& F, int delta, int D,
                                      const DegreeTables& T) {
  long long N = ipow(F.q(), D + 1);
  long long keys = 1;
  for (int i = 0; i <= delta; ++i) keys *= N;
  std::vector<bool> reducible(keys, false);

  std::vector<long long> monics = monic_indices(F, D);
  for (long long sidx : monics) {
    const TPoly& s = T.poly[sidx];
    for (long long ridx = 0; ridx < N; ++ridx) {
      const TPoly& r = T.poly[ridx];
      if (ridx == 0) {
        if (sidx != 1) continue;  // r = 0 needs s = 1 for a primitive factor
      } else if (poly_gcd(r, s).deg() != 0) {
        continue;
      }
      int lived = std::max(T.deg[ridx], T.deg[sidx]);
      int Dg = D - lived;
      if (Dg < 0) continue;
      long long Ng = ipow(F.q(), Dg + 1);
      // Leading cofactor coefficient monic (products with non-monic leading
      // a_delta never meet a canonical candidate).
      std::vector<long long> glead = monic_indices(F, Dg);
      if (delta == 2) {
        for (long long b1i : glead) {
          const TPoly& b1 = T.poly[b1i];
          TPoly sb1 = s * b1, rb1 = r * b1;
          for (long long b0i = 0; b0i < Ng; ++b0i) {
            const TPoly& b0 = T.poly[b0i];
            TPoly a2 = sb1;
            TPoly a1 = s * b0 - rb1;
            TPoly a0 = -(r * b0);
            long long key = (tpoly_to_index(a2, D + 1) * N +
                             tpoly_to_index(a1, D + 1)) * N +
                            tpoly_to_index(a0, D + 1);
            reducible[key] = true;
          }
        }
      } else {  // delta == 3
        for (long long b2i : glead) {
          const TPoly& b2 = T.poly[b2i];
          TPoly sb2 = s * b2, rb2 = r * b2;
          for (long long b1i = 0; b1i < Ng; ++b1i) {
            const TPoly& b1 = T.poly[b1i];
            TPoly a3 = sb2;
            TPoly a2 = s * b1 - rb2;
            TPoly rb1 = r * b1;
            long long k32 = (tpoly_to_index(a3, D + 1) * N +
                             tpoly_to_index(a2, D + 1)) * N;
            for (long long b0i = 0; b0i < Ng; ++b0i) {
              const TPoly& b0 = T.poly[b0i];
              TPoly a1 = s * b0 - rb1;
              TPoly a0 = -(r * b0);
              long long key = (k32 + tpoly_to_index(a1, D + 1)) * N +
                              tpoly_to_index(a0, D + 1);
              reducible[key] = true;
            }
          }
        }
      }
    }
  }
  return reducible;
}

using LeafFn = std::function<void(int delta, const std::array<long long, 4>& idx,
                                  int b_or_D, int maxdeg)>;

// Degree-1 layer: coprime (num, den) pairs, den monic, degrees <= b.
void scan_rational(const FqCtx& F, int b, const LeafFn& leaf) {
  long long Nn = ipow(F.q(), b + 1);
  std::vector<TPoly> nums;
  nums.reserve(Nn);
  for (long long i = 0; i < Nn; ++i) nums.push_back(tpoly_from_index(F, i, b + 1));
  for (long long ni = 0; ni < Nn; ++ni) {
    const TPoly& num = nums[ni];
    for (int dk = 0; dk <= b; ++dk) {
      long long lead = ipow(F.q(), dk);
      long long count = (dk == 0) ? 1 : lead;
      for (long long low = 0; low < count; ++low) {
        long long di = lead + low;
        const TPoly& den = nums[di];
        if (num.is_zero()) {
          if (dk != 0) continue;  // 0 is represented as 0/1 only
        } else if (dk > 0 && poly_gcd(num, den).deg() != 0) {
          continue;
        }
        int maxdeg = std::max(num.deg(), den.deg());
        if (maxdeg < 0) maxdeg = 0;
        leaf(1, {ni, di, 0, 0}, b, maxdeg);
      }
    }
  }
}

void scan_algebraic(const FqCtx& F, int delta, int D, long long budget,
                    const LeafFn& leaf) {
  long long N = ipow(F.q(), D + 1);
  __int128 cands = monic_count(F.q(), D);
  for (int i = 0; i < delta; ++i) cands *= N;
  if (cands > budget)
    throw Error(ErrorKind::Budget,
                "candidate box too large for the enumeration budget");

  DegreeTables T = build_tables(F, D);
  bool direct = (cands <= 20000);
  std::vector<bool> reducible;
  if (!direct) reducible = build_reducible_set(F, delta, D, T);

  std::vector<long long> monics = monic_indices(F, D);
  std::array<long long, 4> idx{};  // idx[0..delta] = a_0..a_delta table indices
  for (long long top : monics) {
    idx[delta] = top;
    // Odometer over a_{delta-1} .. a_0.
    std::vector<long long> lower(delta, 0);
    while (true) {
      for (int i = 0; i < delta; ++i) idx[i] = lower[i];
      bool keep;
      if (direct) {
        std::vector<TPoly> coeffs;
        for (int i = 0; i <= delta; ++i) coeffs.push_back(T.poly[idx[i]]);
        keep = content_is_one(T, idx, delta + 1) &&
               !minpoly_has_rational_root(coeffs);
      } else {
        long long key = idx[delta];
        for (int i = delta - 1; i >= 0; --i) key = key * N + idx[i];
        keep = !reducible[key] && content_is_one(T, idx, delta + 1);
      }
      if (keep) {
        int maxdeg = 0;
        for (int i = 0; i <= delta; ++i) maxdeg = std::max(maxdeg, T.deg[idx[i]]);
        leaf(delta, idx, D, maxdeg);
      }
      int pos = 0;
      while (pos < delta && ++lower[pos] == N) lower[pos++] = 0;
      if (pos == delta) break;
    }
  }
}

void engine(const FqCtx& F, const Rat& B, int d, long long budget,
            const LeafFn& leaf) {
  if (d < 1) throw Error(ErrorKind::Domain, "degree bound must be >= 1");
  if (d > 3)
    throw Error(ErrorKind::Unsupported,
                "degree bounds above 3 need bivariate factorization");
  if (B < Rat(0)) return;

  int b = static_cast<int>(rat_floor(B));
  __int128 rational_cands =
      static_cast<__int128>(ipow(F.q(), b + 1)) * monic_count(F.q(), b);
  if (rational_cands > budget)
    throw Error(ErrorKind::Budget, "candidate box too large for the enumeration budget");
  scan_rational(F, b, leaf);

  for (int delta = 2; delta <= d; ++delta) {
    int D = static_cast<int>(rat_floor(B * Rat(delta)));
    scan_algebraic(F, delta, D, budget, leaf);
  }
}

}  // namespace

void northcott_scan(const FqCtx& F, const Rat& B, int d, long long budget,
                    const std::function<void(int, int)>& visit) {
  engine(F, B, d, budget,
         [&](int delta, const std::array<long long, 4>&, int, int maxdeg) {
           visit(delta, maxdeg);
         });
}

long long northcott_count(const FqCtx& F, const Rat& B, int d, long long budget) {
  long long n = 0;
  northcott_scan(F, B, d, budget, [&](int, int) { ++n; });
  return n;
}

std::vector<Coordinate> northcott_enumerate(const FqCtx& F, const Rat& B, int d,
                                            long long budget) {
  std::vector<Coordinate> items;
  engine(F, B, d, budget,
         [&](int delta, const std::array<long long, 4>& idx, int len_info, int) {
           if (delta == 1) {
             TPoly num = tpoly_from_index(F, idx[0], len_info + 1);
             TPoly den = tpoly_from_index(F, idx[1], len_info + 1);
             items.emplace_back(RationalFunction(num, den));
           } else {
             AlgebraicElement a;
             for (int i = 0; i <= delta; ++i)
               a.coeffs.push_back(tpoly_from_index(F, idx[i], len_info + 1));
             items.emplace_back(std::move(a));
           }
         });

  auto elem_degree = [](const Coordinate& c) {
    return std::holds_alternative<RationalFunction>(c)
               ? 1
               : std::get<AlgebraicElement>(c).degree();
  };
  std::sort(items.begin(), items.end(),
            [&](const Coordinate& A, const Coordinate& Bc) {
              int da = elem_degree(A), db = elem_degree(Bc);
              if (da != db) return da < db;
              Rat ha = coordinate_height(A), hb = coordinate_height(Bc);
              if (ha != hb) return ha < hb;
              if (da == 1) {
                const auto& x = std::get<RationalFunction>(A);
                const auto& y = std::get<RationalFunction>(Bc);
                if (!(x.num() == y.num())) return poly_less(x.num(), y.num());
                return poly_less(x.den(), y.den());
              }
              const auto& x = std::get<AlgebraicElement>(A);
              const auto& y = std::get<AlgebraicElement>(Bc);
              for (int i = da; i >= 0; --i)
                if (!(x.coeffs[i] == y.coeffs[i]))
                  return poly_less(x.coeffs[i], y.coeffs[i]);
              return false;
            });
  return items;
}

}  // namespace ffheight
