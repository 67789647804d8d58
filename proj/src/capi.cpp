#include "dualpair/dualpair.h"

#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "core/arthur.hpp"
#include "core/charexp.hpp"
#include "core/cocycles.hpp"
#include "core/exterior.hpp"
#include "core/fock.hpp"
#include "core/partition.hpp"
#include "core/verify.hpp"
#include "core/vz.hpp"

using json = nlohmann::json;
using namespace dualpair;

struct dp_poly {
  fock::SparsePoly impl;
};
struct dp_multivector {
  exterior::MultiVector impl;
};

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
dp_status guard(F&& f) {
  try {
    return f();
  } catch (const std::length_error& e) {
    g_error = e.what();
    return DP_ERR_CAP_EXCEEDED;
  } catch (const std::domain_error& e) {
    g_error = e.what();
    return DP_ERR_DOMAIN;
  } catch (const json::exception& e) {
    g_error = e.what();
    return DP_ERR_INVALID_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return DP_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return DP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return DP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return DP_ERR_INTERNAL;
  }
}

partitions::Partition make_partition(const int64_t* parts, size_t len) {
  constexpr int64_t kMaxPart = 1 << 20;  // desk scale; keeps allocations sane
  std::vector<long> v;
  v.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    if (parts[i] > kMaxPart) throw std::invalid_argument("partition part exceeds the size cap");
    v.push_back(static_cast<long>(parts[i]));
  }
  return partitions::Partition(std::move(v));
}

Integer to_u64_checked(const Integer& v, uint64_t* out) {
  if (v < 0 || !v.fits_ulong_p()) throw std::domain_error("value does not fit in uint64");
  *out = v.get_ui();
  return v;
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json rational_component_json(const Rational& r) {
  json arr = json::array();
  Integer num = r.get_num(), den = r.get_den();
  arr.push_back(integer_json(num));
  arr.push_back(integer_json(den));
  return arr;
}

json gaussian_json(const GaussianRational& g) {
  json arr = json::array();
  for (const Rational& r : {g.re, g.im}) {
    json c = rational_component_json(r);
    arr.push_back(c[0]);
    arr.push_back(c[1]);
  }
  return arr;
}

Rational rational_component_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as string or integer");
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
  if (j.is_array() && j.size() == 2) {
    // ["a/b", "c/d"]
    return GaussianRational(rational_component_from_json(j[0]),
                            rational_component_from_json(j[1]));
  }
  if (j.is_array() && j.size() == 4) {
    // [re_num, re_den, im_num, im_den]
    Rational re(rational_component_from_json(j[0]));
    Rational red(rational_component_from_json(j[1]));
    Rational im(rational_component_from_json(j[2]));
    Rational imd(rational_component_from_json(j[3]));
    if (red == 0 || imd == 0) throw std::invalid_argument("zero denominator");
    return GaussianRational(re / red, im / imd);
  }
  throw std::invalid_argument(
      "expected a Gaussian rational (string, integer, [re,im] or [rn,rd,in,id])");
}

json partition_json(const partitions::Partition& p) {
  json arr = json::array();
  for (long v : p.parts()) arr.push_back(v);
  return arr;
}

json poly_json(const fock::SparsePoly& p) {
  const fock::Ambient& a = p.ambient();
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<long> exps(static_cast<size_t>(a.var_count()), 0);
    for (const auto& [var, e] : it->first.factors())
      exps[static_cast<size_t>((var.alpha - 1) * a.n + var.j - 1)] = e;
    terms.push_back(json::array({json(exps), gaussian_json(it->second)}));
  }
  return json{{"ambient", {{"p", a.p}, {"q", a.q}, {"n", a.n}}}, {"terms", terms}};
}

json mv_json(const exterior::MultiVector& mv) {
  json terms = json::array();
  for (const auto& [mask, c] : mv.terms()) {
    json indices = json::array();
    uint64_t rest = mask;
    while (rest) {
      int s = __builtin_ctzll(rest);
      rest &= rest - 1;
      exterior::PBasisIndex idx = mv.unslot(s);
      indices.push_back(json::array({idx.alpha, idx.mu}));
    }
    terms.push_back(json::array({indices, gaussian_json(c)}));
  }
  return json{{"p", mv.ambient().p}, {"q", mv.ambient().q}, {"terms", terms}};
}

exterior::MultiVector mv_from_json_impl(const json& j) {
  exterior::PAmbient a{j.at("p").get<long>(), j.at("q").get<long>()};
  exterior::MultiVector mv(a);
  for (const json& term : j.at("terms")) {
    exterior::MultiVector piece = exterior::MultiVector::scalar(a, gaussian_from_json(term.at(1)));
    for (const json& idx : term.at(0)) {
      piece = piece.wedge(exterior::MultiVector::basis_one_form(
          a, {idx.at(0).get<long>(), idx.at(1).get<long>()}));
    }
    mv = mv + piece;
  }
  return mv;
}

vz::LeviDatum levi_from_json(const json& j) {
  vz::LeviDatum levi;
  if (j.contains("u_blocks")) {
    for (const json& b : j.at("u_blocks"))
      levi.u_blocks.push_back({b.at(0).get<long>(), b.at(1).get<long>()});
  }
  levi.so_block = {j.at("so_block").at(0).get<long>(), j.at("so_block").at(1).get<long>()};
  return levi;
}

json levi_json_of(const vz::LeviDatum& levi) {
  json blocks = json::array();
  for (const auto& [pj, qj] : levi.u_blocks) blocks.push_back(json::array({pj, qj}));
  return json{{"u_blocks", blocks},
              {"so_block", json::array({levi.so_block.first, levi.so_block.second})}};
}

arthur::CharDatum char_from_json(const json& j) {
  arthur::CharDatum c;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "quadratic") {
    c.kind = arthur::CharDatum::Kind::Quadratic;
    c.sign = j.at("sign").get<int>() >= 0 ? +1 : -1;
  } else if (kind == "unitary") {
    c.kind = arthur::CharDatum::Kind::Unitary;
    c.weight = j.at("weight").get<long>();
    if (j.contains("shift")) {
      if (j.at("shift").is_string())
        c.shift = parse_rational(j.at("shift").get<std::string>());
      else
        c.shift = Rational(j.at("shift").get<long>());
    }
  } else if (kind == "discrete") {
    c.kind = arthur::CharDatum::Kind::Discrete;
    c.k = j.at("k").get<long>();
    if (c.k < 1) throw std::invalid_argument("discrete parameter k must be positive");
  } else {
    throw std::invalid_argument("unknown character kind: " + kind);
  }
  return c;
}

json char_json_of(const arthur::CharDatum& c) {
  switch (c.kind) {
    case arthur::CharDatum::Kind::Quadratic:
      return json{{"kind", "quadratic"}, {"sign", c.sign}};
    case arthur::CharDatum::Kind::Unitary: {
      json out{{"kind", "unitary"}, {"weight", c.weight}};
      if (c.shift != 0) {
        Rational s = c.shift;
        out["shift"] = s.get_str();
      }
      return out;
    }
    case arthur::CharDatum::Kind::Discrete:
      return json{{"kind", "discrete"}, {"k", c.k}};
  }
  throw std::logic_error("unreachable");
}

arthur::ArchArthurParameter psi_from_json(const std::string& text) {
  json j = json::parse(text);
  arthur::ArchArthurParameter psi;
  psi.m = j.at("m").get<long>();
  for (const json& f : j.at("factors"))
    psi.factors.push_back({char_from_json(f.at("char")), f.at("a").get<long>()});
  return psi;
}

json psi_json_of(const arthur::ArchArthurParameter& psi) {
  json factors = json::array();
  for (const arthur::Factor& f : psi.factors)
    factors.push_back(json{{"char", char_json_of(f.chr)}, {"d", f.chr.dimension()}, {"a", f.a}});
  return json{{"m", psi.m}, {"factors", factors}};
}

std::vector<std::vector<GaussianRational>> matrix_from_json(const std::string& text,
                                                            size_t rows, size_t cols) {
  json j = json::parse(text);
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("matrix JSON must have " + std::to_string(rows) + " rows");
  std::vector<std::vector<GaussianRational>> out;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix JSON must have " + std::to_string(cols) + " columns");
    std::vector<GaussianRational> r;
    for (const json& entry : row) r.push_back(gaussian_from_json(entry));
    out.push_back(std::move(r));
  }
  return out;
}

json check_results_json(const std::vector<verify::CheckResult>& results) {
  json arr = json::array();
  bool all_pass = true;
  for (const verify::CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    arr.push_back(json{
        {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"millis", r.millis}});
  }
  return json{{"pass", all_pass}, {"checks", arr}};
}

}  // namespace

extern "C" {

const char* dp_last_error(void) { return g_error.c_str(); }

const char* dp_version(void) { return "0.1.0"; }

void dp_string_free(char* s) { delete[] s; }

void dp_poly_free(dp_poly* p) { delete p; }

void dp_mv_free(dp_multivector* mv) { delete mv; }

/* ---------------- partitions ---------------- */

dp_status dp_partition_conjugate(const int64_t* parts, size_t len, int64_t* out,
                                 size_t out_capacity, size_t* out_len) {
  return guard([&]() {
    partitions::Partition c = make_partition(parts, len).conjugate();
    if (c.length() > out_capacity) throw std::invalid_argument("output buffer too small");
    for (size_t i = 0; i < c.length(); ++i) out[i] = c.parts()[i];
    *out_len = c.length();
    return DP_OK;
  });
}

dp_status dp_lr_coefficient(const int64_t* lam, size_t lam_len, const int64_t* mu, size_t mu_len,
                            const int64_t* nu, size_t nu_len, uint64_t* out) {
  return guard([&]() {
    to_u64_checked(partitions::lr_coefficient(make_partition(lam, lam_len),
                                              make_partition(mu, mu_len),
                                              make_partition(nu, nu_len)),
                   out);
    return DP_OK;
  });
}

dp_status dp_littlewood_so_multiplicity(const int64_t* mu, size_t mu_len, const int64_t* nu,
                                        size_t nu_len, uint64_t* out) {
  return guard([&]() {
    to_u64_checked(partitions::littlewood_so_multiplicity(make_partition(mu, mu_len),
                                                          make_partition(nu, nu_len)),
                   out);
    return DP_OK;
  });
}

dp_status dp_schur_dim(const int64_t* lam, size_t lam_len, int64_t n, uint64_t* out) {
  return guard([&]() {
    to_u64_checked(partitions::schur_dim(make_partition(lam, lam_len), n), out);
    return DP_OK;
  });
}

dp_status dp_so_harmonic_dim(const int64_t* lam, size_t lam_len, int64_t m, uint64_t* out) {
  return guard([&]() {
    to_u64_checked(partitions::so_harmonic_dim(make_partition(lam, lam_len), m), out);
    return DP_OK;
  });
}

dp_status dp_cauchy_decompose(int64_t p, int64_t q, int64_t R, char** json_out) {
  return guard([&]() {
    json arr = json::array();
    for (const auto& [mu, mustar] : partitions::cauchy_decompose(p, q, R))
      arr.push_back(json{{"mu", partition_json(mu)}, {"mu_conjugate", partition_json(mustar)}});
    *json_out = dup_string(arr.dump());
    return DP_OK;
  });
}

/* ---------------- polynomials ---------------- */

dp_status dp_poly_parse(int64_t p, int64_t q, int64_t n, const char* text, dp_poly** out) {
  return guard([&]() {
    if (p < 0 || q < 0 || n < 1) throw std::invalid_argument("ambient needs p,q >= 0 and n >= 1");
    fock::Ambient a{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    *out = new dp_poly{fock::SparsePoly::parse(a, text)};
    return DP_OK;
  });
}

dp_status dp_poly_clone(const dp_poly* src, dp_poly** out) {
  return guard([&]() {
    *out = new dp_poly{src->impl};
    return DP_OK;
  });
}

dp_status dp_poly_to_text(const dp_poly* p, char** out) {
  return guard([&]() {
    *out = dup_string(p->impl.str());
    return DP_OK;
  });
}

dp_status dp_poly_to_json(const dp_poly* p, char** out) {
  return guard([&]() {
    *out = dup_string(poly_json(p->impl).dump());
    return DP_OK;
  });
}

dp_status dp_poly_equal(const dp_poly* a, const dp_poly* b, int* out) {
  return guard([&]() {
    *out = (a->impl == b->impl) ? 1 : 0;
    return DP_OK;
  });
}

dp_status dp_poly_add(const dp_poly* a, const dp_poly* b, dp_poly** out) {
  return guard([&]() {
    *out = new dp_poly{a->impl + b->impl};
    return DP_OK;
  });
}

dp_status dp_poly_mul(const dp_poly* a, const dp_poly* b, dp_poly** out) {
  return guard([&]() {
    *out = new dp_poly{a->impl * b->impl};
    return DP_OK;
  });
}

dp_status dp_poly_partial(const dp_poly* p, int64_t alpha, int64_t j, dp_poly** out) {
  return guard([&]() {
    *out = new dp_poly{p->impl.partial({static_cast<long>(alpha), static_cast<long>(j)})};
    return DP_OK;
  });
}

dp_status dp_poly_laplacian(const dp_poly* p, int64_t i, int64_t j, dp_poly** out) {
  return guard([&]() {
    *out = new dp_poly{fock::laplacian(p->impl, i, j)};
    return DP_OK;
  });
}

dp_status dp_poly_is_pluriharmonic(const dp_poly* p, int* out) {
  return guard([&]() {
    *out = fock::is_pluriharmonic(p->impl) ? 1 : 0;
    return DP_OK;
  });
}

dp_status dp_witt(int64_t p, int64_t q, int64_t n, const char* kind, int64_t alpha, int64_t j,
                  dp_poly** out) {
  return guard([&]() {
    fock::Ambient a{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    std::string k = kind ? kind : "";
    if (k == "wp")
      *out = new dp_poly{fock::witt_w(a, fock::WittKind::WPrime, alpha, j)};
    else if (k == "wpp")
      *out = new dp_poly{fock::witt_w(a, fock::WittKind::WDoublePrime, alpha, j)};
    else if (k == "t")
      *out = new dp_poly{fock::witt_t(a, j)};
    else
      throw std::invalid_argument("witt kind must be wp, wpp or t");
    return DP_OK;
  });
}

dp_status dp_minor_delta(int64_t p, int64_t q, int64_t n, int64_t k, dp_poly** out) {
  return guard([&]() {
    fock::Ambient a{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    *out = new dp_poly{fock::minor_delta(a, k)};
    return DP_OK;
  });
}

dp_status dp_gl_act(const dp_poly* p, const char* g_json, int64_t twist_num, int64_t twist_den,
                    const char* sqrt_det_json, dp_poly** out, int64_t* carried_num,
                    int64_t* carried_den) {
  return guard([&]() {
    if (twist_den == 0) throw std::invalid_argument("twist denominator must be nonzero");
    size_t n = static_cast<size_t>(p->impl.ambient().n);
    auto g = matrix_from_json(g_json, n, n);
    std::optional<GaussianRational> root;
    if (sqrt_det_json && *sqrt_det_json) root = gaussian_from_json(json::parse(sqrt_det_json));
    fock::GlActResult res = fock::gl_act(g, p->impl, frac(twist_num, twist_den), root);
    *out = new dp_poly{std::move(res.poly)};
    if (carried_num) *carried_num = res.carried_det_power.get_num().get_si();
    if (carried_den) *carried_den = res.carried_det_power.get_den().get_si();
    return DP_OK;
  });
}

dp_status dp_sp_generator(const dp_poly* p, const char* kind, int64_t i, int64_t j,
                          dp_poly** out) {
  return guard([&]() {
    std::string k = kind ? kind : "";
    fock::SpKind sk;
    if (k == "raise")
      sk = fock::SpKind::Raise;
    else if (k == "lower")
      sk = fock::SpKind::Lower;
    else if (k == "mixed")
      sk = fock::SpKind::Mixed;
    else
      throw std::invalid_argument("sp kind must be raise, lower or mixed");
    *out = new dp_poly{fock::sp_generator(p->impl, sk, i, j)};
    return DP_OK;
  });
}

dp_status dp_harmonic_space_dim(int64_t p, int64_t n, int64_t ell, int64_t cap, int64_t* out) {
  return guard([&]() {
    *out = fock::harmonic_space_dim(p, n, ell, cap);
    return DP_OK;
  });
}

/* ---------------- exterior ---------------- */

dp_status dp_mv_clone(const dp_multivector* src, dp_multivector** out) {
  return guard([&]() {
    *out = new dp_multivector{src->impl};
    return DP_OK;
  });
}

dp_status dp_mv_to_json(const dp_multivector* mv, char** out) {
  return guard([&]() {
    *out = dup_string(mv_json(mv->impl).dump());
    return DP_OK;
  });
}

dp_status dp_mv_from_json(const char* text, dp_multivector** out) {
  return guard([&]() {
    *out = new dp_multivector{mv_from_json_impl(json::parse(text))};
    return DP_OK;
  });
}

dp_status dp_mv_wedge(const dp_multivector* a, const dp_multivector* b, dp_multivector** out) {
  return guard([&]() {
    *out = new dp_multivector{a->impl.wedge(b->impl)};
    return DP_OK;
  });
}

dp_status dp_mv_is_zero(const dp_multivector* mv, int* out) {
  return guard([&]() {
    *out = mv->impl.is_zero() ? 1 : 0;
    return DP_OK;
  });
}

dp_status dp_mv_equal(const dp_multivector* a, const dp_multivector* b, int* out) {
  return guard([&]() {
    *out = (a->impl == b->impl) ? 1 : 0;
    return DP_OK;
  });
}

dp_status dp_curvature_form(int64_t p, int64_t q, int64_t mu, int64_t nu, dp_multivector** out) {
  return guard([&]() {
    *out = new dp_multivector{exterior::curvature_form({static_cast<long>(p),
                                                        static_cast<long>(q)},
                                                       mu, nu)};
    return DP_OK;
  });
}

dp_status dp_euler_form(int64_t p, int64_t q, dp_multivector** out) {
  return guard([&]() {
    *out = new dp_multivector{exterior::euler_form({static_cast<long>(p), static_cast<long>(q)})};
    return DP_OK;
  });
}

dp_status dp_vz_vector(int64_t p, int64_t q, int64_t n, dp_multivector** out) {
  return guard([&]() {
    *out = new dp_multivector{exterior::vz_vector({static_cast<long>(p), static_cast<long>(q)},
                                                  n)};
    return DP_OK;
  });
}

/* ---------------- cocycles ---------------- */

dp_status dp_km_value_on_vz(int64_t p, int64_t q, int64_t n, dp_poly** out) {
  return guard([&]() {
    fock::Ambient a{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    *out = new dp_poly{cocycles::km_value_on_vz(a)};
    return DP_OK;
  });
}

dp_status dp_km_pair(int64_t p, int64_t q, int64_t n, const char* xs_json,
                     const dp_multivector* mv, char** value_json) {
  return guard([&]() {
    fock::Ambient a{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    auto xs = matrix_from_json(xs_json, static_cast<size_t>(n), static_cast<size_t>(p));
    GaussianRational v = cocycles::km_pair(a, xs, mv->impl);
    *value_json = dup_string(json{{"value", v.str()}}.dump());
    return DP_OK;
  });
}

dp_status dp_fm_zero(int64_t p, int64_t q, int64_t n, const int64_t* I, const int64_t* beta,
                     size_t len, dp_poly** out) {
  return guard([&]() {
    fock::Ambient a{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    std::vector<long> iv(I, I + len), bv(beta, beta + len);
    *out = new dp_poly{cocycles::fm_zero(a, iv, bv)};
    return DP_OK;
  });
}

dp_status dp_fm_highest_weight_value(int64_t p, int64_t q, int64_t n, const int64_t* a,
                                     size_t a_len, dp_poly** out) {
  return guard([&]() {
    fock::Ambient amb{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    cocycles::FundamentalWeightVector w{std::vector<long>(a, a + a_len)};
    *out = new dp_poly{cocycles::fm_highest_weight_value(amb, w)};
    return DP_OK;
  });
}

dp_status dp_full_cocycle_value(int64_t p, int64_t q, int64_t n, const int64_t* a, size_t a_len,
                                dp_poly** out) {
  return guard([&]() {
    fock::Ambient amb{static_cast<long>(p), static_cast<long>(q), static_cast<long>(n)};
    cocycles::FundamentalWeightVector w{std::vector<long>(a, a + a_len)};
    *out = new dp_poly{cocycles::full_cocycle_value(amb, w)};
    return DP_OK;
  });
}

dp_status dp_vz_ktype_weight(int64_t n, int64_t q, const int64_t* lam, size_t lam_len, int64_t p,
                             char** json_out) {
  return guard([&]() {
    std::vector<long> l(lam, lam + lam_len);
    std::vector<long> w = cocycles::vz_ktype_weight(n, q, l);
    json out{{"weight", w}};
    if (p >= 0) {
      out["twist_num"] = p + q;
      out["twist_den"] = 2;
    }
    *json_out = dup_string(out.dump());
    return DP_OK;
  });
}

/* ---------------- theta-stable parabolics ---------------- */

dp_status dp_dim_u_cap_p(const char* levi_json, int64_t p, int64_t q, int64_t* out) {
  return guard([&]() {
    vz::LeviDatum levi = levi_from_json(json::parse(levi_json));
    *out = vz::dim_u_cap_p(levi, p, q);
    return DP_OK;
  });
}

dp_status dp_low_degree_levis(int64_t R, int64_t p, int64_t q, char** json_out) {
  return guard([&]() {
    json arr = json::array();
    for (const vz::LeviDatum& levi : vz::low_degree_levis(R, p, q))
      arr.push_back(levi_json_of(levi));
    *json_out = dup_string(arr.dump());
    return DP_OK;
  });
}

dp_status dp_cohomology_degrees(const char* family, int64_t n, int64_t parameter,
                                char** json_out) {
  return guard([&]() {
    std::string f = family ? family : "";
    vz::CohomologyFamily fam;
    if (f == "so_n_1_trivial")
      fam = vz::CohomologyFamily::SOn1Trivial;
    else if (f == "so_n_1_weight1")
      fam = vz::CohomologyFamily::SOn1Weight1;
    else if (f == "so_n_2_trivial")
      fam = vz::CohomologyFamily::SOn2Trivial;
    else
      throw std::invalid_argument("unsupported cohomology family: " + f);
    json degrees = json::object();
    for (const auto& [deg, dim] : vz::cohomology_degrees(fam, n, parameter))
      degrees[std::to_string(deg)] = dim;
    *json_out = dup_string(json{{"degrees", degrees}}.dump());
    return DP_OK;
  });
}

/* ---------------- Arthur ---------------- */

dp_status dp_arthur_validate(const char* psi_json, char** report_json) {
  return guard([&]() {
    arthur::ArchArthurParameter psi = psi_from_json(psi_json);
    std::string err = psi.validate();
    json out{{"valid", err.empty()}};
    if (!err.empty()) out["error"] = err;
    out["N"] = psi.N();
    out["total_dimension"] = psi.total_dimension();
    *report_json = dup_string(out.dump());
    return DP_OK;
  });
}

dp_status dp_infinitesimal_character(const char* psi_json, char** json_out) {
  return guard([&]() {
    arthur::ArchArthurParameter psi = psi_from_json(psi_json);
    arthur::InfChar ic = arthur::infinitesimal_character(psi);
    json entries = json::array();
    for (const Rational& r : ic.entries) entries.push_back(r.get_str());
    *json_out = dup_string(json{{"entries", entries},
                                {"regular", ic.regular()},
                                {"sign_parity", ic.sign_parity}}
                               .dump());
    return DP_OK;
  });
}

dp_status dp_exponents(const char* psi_json, const char* reading, char** json_out) {
  return guard([&]() {
    arthur::ArchArthurParameter psi = psi_from_json(psi_json);
    std::string r = reading ? reading : "paired";
    arthur::ExpReading er;
    if (r.empty() || r == "paired")
      er = arthur::ExpReading::PairedFactors;
    else if (r == "scaled")
      er = arthur::ExpReading::ScaledValues;
    else
      throw std::invalid_argument("reading must be paired or scaled");
    json arr = json::array();
    for (const Rational& v : arthur::exponents(psi, er)) arr.push_back(v.get_str());
    *json_out = dup_string(json{{"exponents", arr}}.dump());
    return DP_OK;
  });
}

dp_status dp_aj_parameter(const char* levi_json, int64_t p, int64_t q, char** psi_json) {
  return guard([&]() {
    vz::LeviDatum levi = levi_from_json(json::parse(levi_json));
    arthur::ArchArthurParameter psi = arthur::aj_parameter(levi, p, q);
    *psi_json = dup_string(psi_json_of(psi).dump());
    return DP_OK;
  });
}

dp_status dp_predicates(const char* request_json, char** json_out) {
  return guard([&]() {
    json req = json::parse(request_json);
    std::optional<arthur::ArchArthurParameter> psi;
    if (req.contains("psi")) psi = psi_from_json(req.at("psi").dump());
    long n = req.value("n", 0L), r = req.value("r", 0L);
    long p = req.value("p", 0L), q = req.value("q", 0L);
    if (psi && p + q == 0) {
      p = 1;
      q = psi->m - 1;
    }
    arthur::PredicateReport rep = arthur::predicates(psi ? &*psi : nullptr, n, p, q, r);
    json out{{"highly_non_tempered", rep.highly_non_tempered},
             {"thm4_bound", rep.thm4_bound},
             {"thm1_bound", rep.thm1_bound},
             {"thm3_bound", rep.thm3_bound},
             {"sl2_lower_bound_met", rep.sl2_lower_bound_met},
             {"basic_assumption", rep.basic_assumption},
             {"rank_condition_1", rep.rank_condition_1},
             {"rank_condition_2", rep.rank_condition_2},
             {"rank_condition_3", rep.rank_condition_3}};
    *json_out = dup_string(out.dump());
    return DP_OK;
  });
}

/* ---------------- verify ---------------- */

dp_status dp_verify(const char* suite, char** report_json) {
  dp_status st = guard([&]() {
    std::string name = suite ? suite : "all";
    if (!verify::suite_exists(name)) throw std::invalid_argument("unknown suite: " + name);
    std::vector<verify::CheckResult> results = verify::run_suite(name);
    json out = check_results_json(results);
    *report_json = dup_string(out.dump());
    if (!out.at("pass").get<bool>()) {
      g_error = "verification failed";
      return DP_ERR_VERIFY_FAILED;
    }
    return DP_OK;
  });
  return st;
}

dp_status dp_verify_suites(char** json_out) {
  return guard([&]() {
    json arr = json::array();
    for (const verify::Check& c : verify::checks())
      arr.push_back(json{{"name", c.name}, {"summary", c.summary}});
    *json_out = dup_string(arr.dump());
    return DP_OK;
  });
}

}  // extern "C"
