#include "core/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>

#include "core/arthur.hpp"
#include "core/charexp.hpp"
#include "core/cocycles.hpp"
#include "core/exterior.hpp"
#include "core/fock.hpp"
#include "core/partition.hpp"
#include "core/vz.hpp"

namespace dualpair::verify {

using partitions::Partition;

namespace {

struct Failure {
  std::string message;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure{msg};
}

// ---- 1. km_value_on_vz = minor_delta(n)^q ------------------------------

CheckResult check_harmonic_value() {
  CheckResult res{"harmonic-value", false, "", 0};
  const std::vector<std::array<long, 3>> cases = {
      {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {4, 1, 2}, {4, 2, 2}, {6, 1, 3}};
  long done = 0;
  for (const auto& [p, q, n] : cases) {
    fock::Ambient a{p, q, n};
    fock::SparsePoly value = cocycles::km_value_on_vz(a);
    fock::SparsePoly expected = fock::minor_delta(a, n).pow(q);
    require(value == expected, "km value differs from Delta_" + std::to_string(n) + "^" +
                                   std::to_string(q) + " at (p,q,n)=(" + std::to_string(p) + "," +
                                   std::to_string(q) + "," + std::to_string(n) + ")");
    ++done;
  }
  res.pass = true;
  res.detail = std::to_string(done) + " signatures, exact polynomial equality";
  return res;
}

// ---- 2. full_cocycle_value = prod Delta_k^{a_k} * Delta_n^q -------------

CheckResult check_highest_weight_value() {
  CheckResult res{"highest-weight-value", false, "", 0};
  long done = 0;
  for (long n = 1; n <= 2; ++n) {
    for (long p = 2 * n; p <= 6; ++p) {
      if (p / 2 < n) continue;
      for (long q = 1; q <= 2; ++q) {
        std::vector<long> a(static_cast<size_t>(n), 0);
        // All a with sum <= 3.
        std::function<void(size_t, long)> rec = [&](size_t idx, long left) {
          if (idx == a.size()) {
            fock::Ambient amb{p, q, n};
            cocycles::FundamentalWeightVector w{a};
            fock::SparsePoly value = cocycles::full_cocycle_value(amb, w);
            fock::SparsePoly expected = fock::SparsePoly::constant(amb, GaussianRational(1));
            for (long k = 1; k <= n; ++k) {
              long e = a[static_cast<size_t>(k - 1)] + (k == n ? q : 0);
              if (e > 0) expected = expected * fock::minor_delta(amb, k).pow(e);
            }
            require(value == expected, "cocycle value mismatch at (p,q,n)=(" + std::to_string(p) +
                                           "," + std::to_string(q) + "," + std::to_string(n) + ")");
            ++done;
            return;
          }
          for (long v = 0; v <= left; ++v) {
            a[idx] = v;
            rec(idx + 1, left - v);
          }
          a[idx] = 0;
        };
        rec(0, 3);
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " weights, exact polynomial equality";
  return res;
}

// ---- 3. pluriharmonicity of all emitted values --------------------------

CheckResult check_pluriharmonic() {
  // Re-emits every polynomial from the criterion 1 and criterion 2 grids and
  // checks each against every Delta_ij.
  CheckResult res{"pluriharmonicity", false, "", 0};
  long done = 0;
  const std::vector<std::array<long, 3>> cases = {
      {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {4, 1, 2}, {4, 2, 2}, {6, 1, 3}};
  for (const auto& [p, q, n] : cases) {
    fock::Ambient a{p, q, n};
    require(fock::is_pluriharmonic(cocycles::km_value_on_vz(a)),
            "km value not pluriharmonic at (" + std::to_string(p) + "," + std::to_string(q) + "," +
                std::to_string(n) + ")");
    ++done;
  }
  for (long n = 1; n <= 2; ++n) {
    for (long p = 2 * n; p <= 6; ++p) {
      for (long q = 1; q <= 2; ++q) {
        fock::Ambient amb{p, q, n};
        std::vector<long> a(static_cast<size_t>(n), 0);
        std::function<void(size_t, long)> rec = [&](size_t idx, long left) {
          if (idx == a.size()) {
            cocycles::FundamentalWeightVector w{a};
            require(fock::is_pluriharmonic(cocycles::fm_highest_weight_value(amb, w)),
                    "fm value not pluriharmonic");
            require(fock::is_pluriharmonic(cocycles::full_cocycle_value(amb, w)),
                    "full cocycle value not pluriharmonic");
            done += 2;
            return;
          }
          for (long v = 0; v <= left; ++v) {
            a[idx] = v;
            rec(idx + 1, left - v);
          }
          a[idx] = 0;
        };
        rec(0, 3);
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " values annihilated by every Delta_ij";
  return res;
}

// ---- 4. Cauchy dimension identity ---------------------------------------

CheckResult check_cauchy() {
  CheckResult res{"cauchy-identity", false, "", 0};
  long done = 0;
  for (long p = 1; p <= 16; ++p) {
    for (long q = 1; p * q <= 16; ++q) {
      for (long R = 0; R <= p * q; ++R) {
        Integer total = 0;
        for (const auto& [mu, mustar] : partitions::cauchy_decompose(p, q, R))
          total += partitions::schur_dim(mu, p) * partitions::schur_dim(mustar, q);
        require(total == partitions::binomial(static_cast<unsigned long>(p * q),
                                              static_cast<unsigned long>(R)),
                "Cauchy identity fails at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    " R=" + std::to_string(R));
        ++done;
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " (p,q,R) triples match binomial coefficients";
  return res;
}

// ---- 5. Littlewood branching vs character oracle -------------------------

CheckResult check_littlewood_oracle() {
  CheckResult res{"littlewood-vs-characters", false, "", 0};
  long done = 0;
  for (long p : {3, 4, 5}) {
    long ell = p / 2;
    for (long size = 0; size <= 5; ++size) {
      for (const Partition& mu : partitions::partitions_of(size, ell)) {
        auto table = charexp::branch_to_so(charexp::schur_restricted(mu, p), p);
        // Completeness: dims add up to dim S_mu(C^p).
        Integer dims = 0;
        for (const auto& [nu, mult] : table) dims += mult * partitions::so_harmonic_dim(nu, p);
        require(dims == partitions::schur_dim(mu, p),
                "oracle expansion dimensions disagree for mu=" + mu.str() + " p=" +
                    std::to_string(p));
        for (long nsize = 0; nsize <= size; ++nsize) {
          for (const Partition& nu : partitions::partitions_of(nsize, ell)) {
            Integer lhs = partitions::littlewood_so_multiplicity(mu, nu);
            auto it = table.find(nu);
            Integer rhs = it == table.end() ? Integer(0) : it->second;
            require(lhs == rhs, "branching mismatch mu=" + mu.str() + " nu=" + nu.str() +
                                    " p=" + std::to_string(p) + ": tableau " + lhs.get_str() +
                                    " vs characters " + rhs.get_str());
            ++done;
          }
        }
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " (mu,nu,p) multiplicities match the character expansion";
  return res;
}

// ---- 6. rectangular branching multiplicity ------------------------------

CheckResult check_rectangular() {
  CheckResult res{"rectangular-multiplicity", false, "", 0};
  long done = 0;
  for (long q = 1; q <= 4; ++q) {
    for (long n = 1; n <= 3; ++n) {
      for (long r = 0; r <= n; ++r) {
        Integer got = partitions::littlewood_so_multiplicity(Partition::rectangle(n, q),
                                                             Partition::rectangle(r, q));
        Integer expected = (r == n) ? 1 : (q % 2 == 0 ? 1 : 0);
        require(got == expected, "rectangular multiplicity wrong at q=" + std::to_string(q) +
                                     " n=" + std::to_string(n) + " r=" + std::to_string(r));
        ++done;
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " rectangle pairs, value 1 iff q even (or mu = nu)";
  return res;
}

// ---- 7. Kashiwara-Vergne dimension identity ------------------------------

CheckResult check_kv_dimensions() {
  CheckResult res{"kv-dimension-identity", false, "", 0};
  long done = 0;
  for (long n = 1; n <= 2; ++n) {
    for (long p = 2 * n; p <= 4; ++p) {  // validity needs n <= floor(p/2)
      for (long ell = 0; ell <= 4; ++ell) {
        long lhs = fock::harmonic_space_dim(p, n, ell);
        Integer rhs = 0;
        for (const Partition& lam : partitions::partitions_of(ell, n))
          rhs += partitions::schur_dim(lam, n) * partitions::so_harmonic_dim(lam, p);
        require(Integer(lhs) == rhs, "KV dimension identity fails at p=" + std::to_string(p) +
                                         " n=" + std::to_string(n) + " ell=" + std::to_string(ell));
        ++done;
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " components: exact nullspace = Schur x harmonic sum";
  return res;
}

// ---- 8. Euler forms -------------------------------------------------------

CheckResult check_euler() {
  CheckResult res{"euler-form", false, "", 0};
  for (long q = 1; q <= 5; q += 2) {
    exterior::PAmbient a{3, q};
    require(exterior::euler_form(a).is_zero(), "e_q nonzero for odd q=" + std::to_string(q));
  }
  {
    exterior::PAmbient a{2, 2};
    require(!exterior::euler_form(a).is_zero(), "e_2 vanishes for (p,q)=(2,2)");
  }
  long done = 3;
  for (long p = 1; p <= 3; ++p) {
    for (long q = 2; q <= 3; q += 2) {  // even q only; odd q gives e_q = 0
      exterior::PAmbient a{p, q};
      exterior::MultiVector e = exterior::euler_form(a);
      for (long k = 1; k * q <= p * q; ++k) {
        bool nonzero = !e.wedge_pow(k).is_zero();
        require(nonzero == (k <= p), "e_q^k nonvanishing wrong at p=" + std::to_string(p) +
                                         " q=" + std::to_string(q) + " k=" + std::to_string(k));
        ++done;
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " Euler form identities (vanishing, nonvanishing, powers)";
  return res;
}

// ---- 9. Root counts and low-degree Levi classification --------------------

CheckResult check_root_counts() {
  CheckResult res{"root-count-and-classification", false, "", 0};
  long done = 0;
  for (long p = 1; p <= 9; ++p) {
    for (long q = 1; p + q <= 10; ++q) {
      for (long n = 0; 2 * n <= p; ++n) {
        vz::LeviDatum levi;
        for (long j = 0; j < n; ++j) levi.u_blocks.push_back({1, 0});
        levi.so_block = {p - 2 * n, q};
        require(vz::dim_u_cap_p(levi, p, q) == n * q,
                "dim(u cap p) != nq at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    " n=" + std::to_string(n));
        ++done;
      }
    }
  }
  // Exhaustive classification check: low_degree_levis throws if any Levi
  // below the bounds has a mixed unitary block, and every hit must have
  // R = nq or R = np.
  for (long p = 1; p <= 7; ++p) {
    for (long q = 1; p + q <= 8; ++q) {
      for (long R = 0; R < p + q - 3 && 4 * R < p * q; ++R) {
        for (const vz::LeviDatum& levi : vz::low_degree_levis(R, p, q)) {
          bool first_kind = levi.sum_qu() == 0 && R == levi.sum_pu() * q;
          bool second_kind = levi.sum_pu() == 0 && R == levi.sum_qu() * p;
          require(first_kind || second_kind,
                  "unexpected Levi shape " + levi.str() + " at R=" + std::to_string(R));
          ++done;
        }
      }
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " root counts and classified Levi shapes";
  return res;
}

// ---- 10. Arthur calculus ---------------------------------------------------

CheckResult check_arthur() {
  CheckResult res{"arthur-calculus", false, "", 0};
  long done = 0;
  for (long m = 4; m <= 12; ++m) {
    for (long r = 0; r <= 3; ++r) {
      for (long q = 1; q < m; ++q) {
        long p = m - q;
        if (p - 2 * r < 1) continue;
        long m0 = m - 2 * r;
        if ((p - 2 * r) * q == 0 || m0 < 2) continue;
        vz::LeviDatum levi;
        for (long j = 0; j < r; ++j) levi.u_blocks.push_back({1, 0});
        levi.so_block = {p - 2 * r, q};
        arthur::ArchArthurParameter psi = arthur::aj_parameter(levi, p, q);

        // Exponents: the SO-block string {m-2r-2, ..., 2r+2-m} plus zeros.
        std::vector<Rational> expected;
        for (long v = m0 - 2; v >= 2 - m0; v -= 2) expected.push_back(Rational(v));
        long zeros = 2 * r + (m0 % 2 == 0 ? 1 : 0);
        for (long z = 0; z < zeros; ++z) expected.push_back(Rational(0));
        std::sort(expected.begin(), expected.end(), std::greater<Rational>());
        require(arthur::exponents(psi) == expected,
                "exponent set wrong for m=" + std::to_string(m) + " r=" + std::to_string(r));

        // Infinitesimal character: merge of the rho-strings, computed here
        // independently from the factor data.
        std::vector<Rational> values;
        for (long j = 1; j <= r; ++j) {
          values.push_back(frac(j, 2));
          values.push_back(frac(-j, 2));
        }
        for (long j = 0; j < m0 - 1; ++j) values.push_back(frac(m0 - 2 - 2 * j, 2));
        if (m0 % 2 == 0) values.push_back(Rational(0));
        std::sort(values.begin(), values.end(), std::greater<Rational>());
        values.resize(values.size() / 2);
        arthur::InfChar ic = arthur::infinitesimal_character(psi);
        require(ic.entries == values, "infinitesimal character wrong for m=" + std::to_string(m) +
                                          " r=" + std::to_string(r) + ": got " + ic.str());
        ++done;
      }
    }
  }

  // Lemma LL regularity failure: two quadratic factors of equal parity with
  // min(a,b) >= 2 always share a nonzero rho-string entry, so the
  // infinitesimal character repeats.  (min(a,b) = 1 only happens for even m,
  // where the two zero contributions collapse into a single representative
  // and the character can be regular; that is the lemma's b < a escape.)
  for (long m = 4; m <= 12; ++m) {
    long N = 2 * (m / 2);
    for (long a = 2; a < N; ++a) {
      if ((a - (m - 1)) % 2 != 0) continue;
      for (long b = 2; b <= a && a + b <= N; ++b) {
        if ((b - (m - 1)) % 2 != 0) continue;
        arthur::ArchArthurParameter psi;
        psi.m = m;
        arthur::CharDatum triv, sgn;
        sgn.sign = -1;
        psi.factors.push_back({triv, a});
        psi.factors.push_back({sgn, b});
        long rest = N - a - b;
        if (rest > 0) {
          arthur::CharDatum mu;
          mu.kind = arthur::CharDatum::Kind::Unitary;
          mu.weight = 1;
          if (rest % 2 != 0) continue;
          psi.factors.push_back({mu, rest / 2});
          psi.factors.push_back({mu.inverse(), rest / 2});
        }
        if (!psi.validate().empty()) continue;
        arthur::InfChar ic = arthur::infinitesimal_character(psi);
        require(!ic.regular(), "equal-parity quadratic pair not detected as non-regular at m=" +
                                   std::to_string(m) + " a=" + std::to_string(a) + " b=" +
                                   std::to_string(b));
        ++done;
      }
    }
  }

  // Lemma LL shape logic, exhaustively over shapes with N <= 12: a regular
  // parameter with a highly-non-tempered quadratic factor R_a dominates every
  // other SL2 dimension.  Quadratic factors range over both signs and all
  // parity-admissible a; the remainder is filled by unitary pairs of every
  // possible SL2 shape (distinct weights keep the factors distinct).
  {
    std::vector<arthur::ArchArthurParameter> pool;
    for (long m = 4; m <= 13; ++m) {
      long N = 2 * (m / 2);
      std::vector<arthur::Factor> atoms;
      arthur::CharDatum triv, sgn;
      sgn.sign = -1;
      for (long a = 1; a <= N; ++a) {
        if ((a - (m - 1)) % 2 == 0) {
          atoms.push_back({triv, a});
          atoms.push_back({sgn, a});
        }
      }
      std::function<void(size_t, long, arthur::ArchArthurParameter&)> build =
          [&](size_t idx, long left, arthur::ArchArthurParameter& psi) {
            if (idx == atoms.size()) {
              if (left % 2 != 0) return;
              // Fill the remaining dimension with unitary pairs R_{b_1} >=
              // R_{b_2} >= ..., one pair per part.
              for (const partitions::Partition& bs : partitions::partitions_of(left / 2)) {
                arthur::ArchArthurParameter full = psi;
                long weight = 1;
                for (long b : bs.parts()) {
                  arthur::CharDatum mu;
                  mu.kind = arthur::CharDatum::Kind::Unitary;
                  mu.weight = weight++;
                  full.factors.push_back({mu, b});
                  full.factors.push_back({mu.inverse(), b});
                }
                if (full.validate().empty()) pool.push_back(full);
              }
              return;
            }
            build(idx + 1, left, psi);
            if (atoms[idx].dimension() <= left) {
              psi.factors.push_back(atoms[idx]);
              build(idx + 1, left - atoms[idx].dimension(), psi);
              psi.factors.pop_back();
            }
          };
      arthur::ArchArthurParameter psi;
      psi.m = m;
      build(0, N, psi);
    }
    for (const arthur::ArchArthurParameter& psi : pool) {
      if (!arthur::infinitesimal_character(psi).regular()) continue;
      for (const arthur::Factor& f : psi.factors) {
        if (f.chr.kind != arthur::CharDatum::Kind::Quadratic || 3 * f.a <= psi.m - 1) continue;
        for (const arthur::Factor& g : psi.factors) {
          if (&g == &f) continue;
          require(g.a < f.a, "Lemma LL shape logic fails at m=" + std::to_string(psi.m) +
                                 ": factor R_" + std::to_string(g.a) +
                                 " alongside quadratic R_" + std::to_string(f.a));
        }
        ++done;
      }
    }
  }

  // Predicate truth tables for m <= 12, hand-computed comparisons.
  for (long m = 2; m <= 12; ++m) {
    for (long n = 0; n <= 6; ++n) {
      for (long p = 1; p < m; ++p) {
        long q = m - p;
        arthur::PredicateReport rep = arthur::predicates(nullptr, n, p, q, 0);
        require(rep.thm4_bound == (2 * n < m - m / 2 - 1), "thm4 bound mismatch");
        require(rep.thm1_bound == (4 * n < 2 * (p / 2)), "thm1 bound mismatch");
        require(rep.thm3_bound == (4 * n < 2 * ((p + 1) / 2)), "thm3 bound mismatch");
        ++done;
      }
    }
    // highly-non-tempered detection on single-quadratic-factor parameters.
    for (long a = 1; a <= 2 * (m / 2); ++a) {
      if ((a - (m - 1)) % 2 != 0) continue;
      long rest = 2 * (m / 2) - a;
      if (rest % 2 != 0) continue;
      arthur::ArchArthurParameter psi;
      psi.m = m;
      arthur::CharDatum triv;
      psi.factors.push_back({triv, a});
      if (rest > 0) {
        arthur::CharDatum mu;
        mu.kind = arthur::CharDatum::Kind::Unitary;
        mu.weight = 1;
        psi.factors.push_back({mu, rest / 2});
        psi.factors.push_back({mu.inverse(), rest / 2});
      }
      if (!psi.validate().empty()) continue;
      arthur::PredicateReport rep = arthur::predicates(&psi, 0, 1, m - 1, 0);
      require(rep.highly_non_tempered == (3 * a > m - 1),
              "highly-non-tempered flag wrong at m=" + std::to_string(m) + " a=" +
                  std::to_string(a));
      ++done;
    }
  }
  res.pass = true;
  res.detail = std::to_string(done) + " Arthur-side identities and truth table rows";
  return res;
}

CheckResult timed(const std::string& name, CheckResult (*fn)()) {
  auto start = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    res = fn();
  } catch (const Failure& f) {
    res.name = name;
    res.pass = false;
    res.detail = f.message;
  } catch (const std::exception& e) {
    res.name = name;
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.name = name;
  res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return res;
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> kChecks = {
      {"harmonic-value", "cocycle value on e(q) equals Delta_n^q",
       [] { return timed("harmonic-value", check_harmonic_value); }},
      {"highest-weight-value", "full cocycle value equals the minor product",
       [] { return timed("highest-weight-value", check_highest_weight_value); }},
      {"pluriharmonicity", "all emitted values killed by every Delta_ij",
       [] { return timed("pluriharmonicity", check_pluriharmonic); }},
      {"cauchy-identity", "exterior power dimensions match binomials",
       [] { return timed("cauchy-identity", check_cauchy); }},
      {"littlewood-vs-characters", "tableau branching matches character expansion",
       [] { return timed("littlewood-vs-characters", check_littlewood_oracle); }},
      {"rectangular-multiplicity", "rectangle branching is 1 iff q is even",
       [] { return timed("rectangular-multiplicity", check_rectangular); }},
      {"kv-dimension-identity", "harmonic nullspace dims match Schur x SO sums",
       [] { return timed("kv-dimension-identity", check_kv_dimensions); }},
      {"euler-form", "Euler form vanishing and nonvanishing powers",
       [] { return timed("euler-form", check_euler); }},
      {"root-count-and-classification", "dim(u cap p) counts and Levi classification",
       [] { return timed("root-count-and-classification", check_root_counts); }},
      {"arthur-calculus", "exponents, infinitesimal characters, predicates",
       [] { return timed("arthur-calculus", check_arthur); }},
  };
  return kChecks;
}

bool suite_exists(const std::string& name) {
  if (name == "all") return true;
  for (const Check& c : checks())
    if (c.name == name) return true;
  return false;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const Check& c : checks()) names.push_back(c.name);
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  std::vector<CheckResult> out;
  for (const Check& c : checks()) {
    if (name == "all" || c.name == name) out.push_back(c.run());
  }
  return out;
}

}  // namespace dualpair::verify
