// Command line front end for the dualpair shared library.  Talks to the
// library exclusively through the C API in dualpair/dualpair.h; all machine
// output is JSON on stdout (human-readable output with --human is advisory).
//
// Exit codes: 0 success, 1 failed verification/identity, 2 usage or
// validation error.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dualpair/dualpair.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

void check(dp_status st) {
  if (st == DP_OK) return;
  int code = (st == DP_ERR_VERIFY_FAILED) ? kExitVerifyFailed : kExitUsage;
  if (st == DP_ERR_INTERNAL) code = kExitUsage;
  throw CliError{code, dp_last_error()};
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  dp_string_free(s);
  return out;
}

using PolyPtr = std::unique_ptr<dp_poly, decltype(&dp_poly_free)>;
using MvPtr = std::unique_ptr<dp_multivector, decltype(&dp_mv_free)>;

PolyPtr wrap(dp_poly* p) { return PolyPtr(p, &dp_poly_free); }
MvPtr wrap(dp_multivector* mv) { return MvPtr(mv, &dp_mv_free); }

std::vector<int64_t> parse_parts(const std::string& s) {
  std::vector<int64_t> out;
  if (s.empty() || s == "[]") return out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

json poly_report(const dp_poly* p) {
  char* text = nullptr;
  check(dp_poly_to_text(p, &text));
  char* js = nullptr;
  check(dp_poly_to_json(p, &js));
  return json{{"text", take_string(text)}, {"poly", json::parse(take_string(js))}};
}

bool g_human = false;

void emit(const json& machine, const std::string& human) {
  if (g_human)
    std::cout << human << "\n";
  else
    std::cout << machine.dump() << "\n";
}

// Derives the ambient signature from a Levi datum when --p/--q are absent.
void fill_signature_from_levi(const std::string& levi_json, int64_t& p, int64_t& q) {
  if (p > 0 || q > 0) return;
  json j = json::parse(levi_json);
  int64_t sp = 0, sq = 0;
  if (j.contains("u_blocks")) {
    for (const auto& b : j["u_blocks"]) {
      sp += b.at(0).get<int64_t>();
      sq += b.at(1).get<int64_t>();
    }
  }
  p = j.at("so_block").at(0).get<int64_t>() + 2 * sp;
  q = j.at("so_block").at(1).get<int64_t>() + 2 * sq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dualpair: exact local computations for dual pair correspondences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--human", g_human, "human-readable output instead of JSON");

  int exit_code = kExitOk;

  // ---------------- partition ----------------
  auto* partition = app.add_subcommand("partition", "partition utilities");
  std::string part_parts;
  int64_t part_schur_n = 0, part_so_m = 0;
  partition->add_option("--parts", part_parts, "partition, comma separated (\"3,1\")")
      ->required();
  partition->add_option("--schur-dim", part_schur_n, "also report dim S_lambda(C^n)");
  partition->add_option("--so-harmonic-dim", part_so_m,
                        "also report the SO(m) harmonic dimension");
  partition->callback([&]() {
    std::vector<int64_t> parts = parse_parts(part_parts);
    std::vector<int64_t> conj(static_cast<size_t>(parts.empty() ? 0 : parts[0]) + 1);
    size_t conj_len = 0;
    check(dp_partition_conjugate(parts.data(), parts.size(), conj.data(), conj.size(),
                                 &conj_len));
    conj.resize(conj_len);
    int64_t size = 0;
    for (int64_t v : parts) size += v;
    json out{{"parts", parts}, {"conjugate", conj}, {"size", size}, {"length", parts.size()}};
    std::ostringstream human;
    human << "partition [" << part_parts << "]: size " << size << ", conjugate [";
    for (size_t i = 0; i < conj.size(); ++i) human << (i ? "," : "") << conj[i];
    human << "]";
    if (part_schur_n > 0) {
      uint64_t d = 0;
      check(dp_schur_dim(parts.data(), parts.size(), part_schur_n, &d));
      out["schur_dim"] = d;
      human << ", dim S(C^" << part_schur_n << ") = " << d;
    }
    if (part_so_m > 0) {
      uint64_t d = 0;
      check(dp_so_harmonic_dim(parts.data(), parts.size(), part_so_m, &d));
      out["so_harmonic_dim"] = d;
      human << ", SO(" << part_so_m << ") harmonic dim = " << d;
    }
    emit(out, human.str());
  });

  // ---------------- lr ----------------
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  std::string lr_lam, lr_mu, lr_nu;
  lr->add_option("--lam", lr_lam, "outer partition")->required();
  lr->add_option("--mu", lr_mu, "inner partition (default empty)");
  lr->add_option("--nu", lr_nu, "weight partition (default empty)");
  lr->callback([&]() {
    auto lam = parse_parts(lr_lam), mu = parse_parts(lr_mu), nu = parse_parts(lr_nu);
    uint64_t c = 0;
    check(dp_lr_coefficient(lam.data(), lam.size(), mu.data(), mu.size(), nu.data(), nu.size(),
                            &c));
    json out{{"lam", lam},
             {"mu", mu},
             {"nu", nu},
             {"lr_coefficient", c},
             {"provenance", "count of Littlewood-Richardson skew tableaux of shape lam/mu "
                            "and weight nu"}};
    emit(out, "c^{" + lr_lam + "}_{" + lr_mu + "," + lr_nu + "} = " + std::to_string(c) +
                  "  (LR tableau count)");
  });

  // ---------------- branch ----------------
  auto* branch = app.add_subcommand("branch", "GL -> SO branching multiplicity (Littlewood)");
  std::string br_mu, br_nu;
  branch->add_option("--mu", br_mu, "GL highest weight")->required();
  branch->add_option("--nu", br_nu, "SO highest weight (default empty)");
  branch->callback([&]() {
    auto mu = parse_parts(br_mu), nu = parse_parts(br_nu);
    uint64_t c = 0;
    check(dp_littlewood_so_multiplicity(mu.data(), mu.size(), nu.data(), nu.size(), &c));
    json out{{"mu", mu},
             {"nu", nu},
             {"multiplicity", c},
             {"provenance",
              "sum over even-row partitions xi of c^{mu}_{nu,xi}; valid as an SO(p) "
              "multiplicity for length(mu) <= floor(p/2)"}};
    emit(out, "multiplicity of [" + br_nu + "] in S_{" + br_mu + "} = " + std::to_string(c));
  });

  // ---------------- cauchy ----------------
  auto* cauchy = app.add_subcommand("cauchy", "exterior power decomposition of C^p (x) C^q");
  int64_t ca_p = 0, ca_q = 0, ca_R = 0;
  cauchy->add_option("--p", ca_p)->required();
  cauchy->add_option("--q", ca_q)->required();
  cauchy->add_option("--R", ca_R)->required();
  cauchy->callback([&]() {
    char* js = nullptr;
    check(dp_cauchy_decompose(ca_p, ca_q, ca_R, &js));
    json pairs = json::parse(take_string(js));
    emit(json{{"p", ca_p}, {"q", ca_q}, {"R", ca_R}, {"pairs", pairs}},
         "Lambda^" + std::to_string(ca_R) + " decomposes into " + std::to_string(pairs.size()) +
             " Schur pairs");
  });

  // ---------------- poly ----------------
  auto* poly = app.add_subcommand("poly", "exact polynomial arithmetic in the Fock variables");
  int64_t po_p = 0, po_q = 0, po_n = 1;
  std::string po_expr, po_add, po_mul, po_partial, po_laplacian, po_witt, po_sp, po_glact,
      po_twist = "0", po_sqrt;
  bool po_harm = false;
  poly->add_option("--p", po_p)->required();
  poly->add_option("--q", po_q)->required();
  poly->add_option("--n", po_n)->required();
  poly->add_option("--expr", po_expr, "polynomial text, e.g. \"1*z[1,1]^2 + -1*z[2,1]\"");
  poly->add_option("--witt", po_witt, "witt form kind:alpha,j with kind wp|wpp|t");
  poly->add_option("--add", po_add, "add this polynomial");
  poly->add_option("--mul", po_mul, "multiply by this polynomial");
  poly->add_option("--partial", po_partial, "differentiate by z[alpha,j], format alpha,j");
  poly->add_option("--laplacian", po_laplacian, "apply Delta_{i,j}, format i,j");
  poly->add_option("--sp", po_sp, "oscillator generator kind:i,j (raise|lower|mixed)");
  poly->add_option("--gl-act", po_glact, "n x n matrix JSON for the GL(n) action");
  poly->add_option("--twist", po_twist, "determinant twist a/b for --gl-act");
  poly->add_option("--sqrt-det", po_sqrt, "designated square root of det(g)");
  poly->add_flag("--pluriharmonic", po_harm, "report whether the result is pluriharmonic");
  poly->callback([&]() {
    PolyPtr cur(nullptr, &dp_poly_free);
    if (!po_expr.empty()) {
      dp_poly* raw = nullptr;
      check(dp_poly_parse(po_p, po_q, po_n, po_expr.c_str(), &raw));
      cur = wrap(raw);
    }
    if (!po_witt.empty()) {
      auto colon = po_witt.find(':');
      std::string kind = po_witt.substr(0, colon);
      int64_t alpha = 1, j = 1;
      if (colon != std::string::npos) {
        auto rest = parse_parts(po_witt.substr(colon + 1));
        if (!rest.empty()) alpha = rest[0];
        if (rest.size() > 1) j = rest[1];
        if (kind == "t" && rest.size() == 1) j = rest[0];
      }
      dp_poly* raw = nullptr;
      check(dp_witt(po_p, po_q, po_n, kind.c_str(), alpha, j, &raw));
      cur = wrap(raw);
    }
    if (!cur) throw CliError{kExitUsage, "poly needs --expr or --witt"};
    if (!po_add.empty()) {
      dp_poly *rhs = nullptr, *sum = nullptr;
      check(dp_poly_parse(po_p, po_q, po_n, po_add.c_str(), &rhs));
      PolyPtr hold = wrap(rhs);
      check(dp_poly_add(cur.get(), rhs, &sum));
      cur = wrap(sum);
    }
    if (!po_mul.empty()) {
      dp_poly *rhs = nullptr, *prod = nullptr;
      check(dp_poly_parse(po_p, po_q, po_n, po_mul.c_str(), &rhs));
      PolyPtr hold = wrap(rhs);
      check(dp_poly_mul(cur.get(), rhs, &prod));
      cur = wrap(prod);
    }
    if (!po_partial.empty()) {
      auto ij = parse_parts(po_partial);
      if (ij.size() != 2) throw CliError{kExitUsage, "--partial needs alpha,j"};
      dp_poly* out = nullptr;
      check(dp_poly_partial(cur.get(), ij[0], ij[1], &out));
      cur = wrap(out);
    }
    if (!po_laplacian.empty()) {
      auto ij = parse_parts(po_laplacian);
      if (ij.size() != 2) throw CliError{kExitUsage, "--laplacian needs i,j"};
      dp_poly* out = nullptr;
      check(dp_poly_laplacian(cur.get(), ij[0], ij[1], &out));
      cur = wrap(out);
    }
    if (!po_sp.empty()) {
      auto colon = po_sp.find(':');
      if (colon == std::string::npos) throw CliError{kExitUsage, "--sp needs kind:i,j"};
      auto ij = parse_parts(po_sp.substr(colon + 1));
      if (ij.size() != 2) throw CliError{kExitUsage, "--sp needs kind:i,j"};
      dp_poly* out = nullptr;
      check(dp_sp_generator(cur.get(), po_sp.substr(0, colon).c_str(), ij[0], ij[1], &out));
      cur = wrap(out);
    }
    json extra = json::object();
    if (!po_glact.empty()) {
      auto slash = po_twist.find('/');
      int64_t tn = std::stoll(slash == std::string::npos ? po_twist : po_twist.substr(0, slash));
      int64_t td = slash == std::string::npos ? 1 : std::stoll(po_twist.substr(slash + 1));
      dp_poly* out = nullptr;
      int64_t cn = 0, cd = 1;
      check(dp_gl_act(cur.get(), po_glact.c_str(), tn, td,
                      po_sqrt.empty() ? nullptr : po_sqrt.c_str(), &out, &cn, &cd));
      cur = wrap(out);
      if (cn != 0) {
        extra["formal_det_power"] = std::to_string(cn) + "/" + std::to_string(cd);
      }
    }
    json out = poly_report(cur.get());
    for (auto& [k, v] : extra.items()) out[k] = v;
    if (po_harm) {
      int h = 0;
      check(dp_poly_is_pluriharmonic(cur.get(), &h));
      out["pluriharmonic"] = (h == 1);
    }
    emit(out, out["text"].get<std::string>() +
                  (out.contains("pluriharmonic")
                       ? (out["pluriharmonic"].get<bool>() ? "  [pluriharmonic]"
                                                           : "  [not pluriharmonic]")
                       : ""));
  });

  // ---------------- harmonic-dim ----------------
  auto* hdim = app.add_subcommand("harmonic-dim", "dimension of the pluriharmonic component");
  int64_t hd_p = 0, hd_n = 0, hd_ell = 0, hd_cap = 0;
  hdim->add_option("--p", hd_p)->required();
  hdim->add_option("--n", hd_n)->required();
  hdim->add_option("--ell", hd_ell)->required();
  hdim->add_option("--cap", hd_cap, "nullspace size cap (0 = env/default)");
  hdim->callback([&]() {
    int64_t d = 0;
    check(dp_harmonic_space_dim(hd_p, hd_n, hd_ell, hd_cap, &d));
    emit(json{{"p", hd_p}, {"n", hd_n}, {"ell", hd_ell}, {"dimension", d}},
         "dim H^" + std::to_string(hd_ell) + " = " + std::to_string(d));
  });

  // ---------------- minor ----------------
  auto* minor = app.add_subcommand("minor", "leading principal minor Delta_k of W''");
  int64_t mi_p = 0, mi_q = 0, mi_n = 0, mi_k = 1;
  minor->add_option("--p", mi_p)->required();
  minor->add_option("--q", mi_q)->required();
  minor->add_option("--n", mi_n)->required();
  minor->add_option("--k", mi_k)->required();
  minor->callback([&]() {
    dp_poly* raw = nullptr;
    check(dp_minor_delta(mi_p, mi_q, mi_n, mi_k, &raw));
    PolyPtr cur = wrap(raw);
    int harm = 0;
    check(dp_poly_is_pluriharmonic(cur.get(), &harm));
    json out = poly_report(cur.get());
    out["k"] = mi_k;
    out["pluriharmonic"] = (harm == 1);
    emit(out, "Delta_" + std::to_string(mi_k) + " = " + out["text"].get<std::string>());
  });

  // ---------------- cocycle ----------------
  auto* cocycle = app.add_subcommand("cocycle", "Kudla-Millson / Funke-Millson cocycle values");
  cocycle->require_subcommand(1);
  int64_t co_p = 0, co_q = 0, co_n = 0;
  auto add_sig = [&](CLI::App* cmd) {
    cmd->add_option("--p", co_p)->required();
    cmd->add_option("--q", co_q)->required();
    cmd->add_option("--n", co_n)->required();
  };

  auto* co_value = cocycle->add_subcommand("value", "phi_{nq}(e(q)) as a polynomial");
  add_sig(co_value);
  co_value->callback([&]() {
    dp_poly* raw = nullptr;
    check(dp_km_value_on_vz(co_p, co_q, co_n, &raw));
    PolyPtr value = wrap(raw);
    dp_poly* mraw = nullptr;
    check(dp_minor_delta(co_p, co_q, co_n, co_n, &mraw));
    PolyPtr minor_poly = wrap(mraw);
    PolyPtr closed(nullptr, &dp_poly_free);
    {
      dp_poly* acc = nullptr;
      check(dp_poly_clone(minor_poly.get(), &acc));
      closed = wrap(acc);
      for (int64_t i = 1; i < co_q; ++i) {
        dp_poly* next = nullptr;
        check(dp_poly_mul(closed.get(), minor_poly.get(), &next));
        closed = wrap(next);
      }
    }
    int eq = 0;
    check(dp_poly_equal(value.get(), closed.get(), &eq));
    json out = poly_report(value.get());
    out["matches_closed_form"] = (eq == 1);
    out["closed_form"] = "Delta_" + std::to_string(co_n) + "^" + std::to_string(co_q);
    emit(out, "phi(e(q)) = " + out["text"].get<std::string>() +
                  (eq ? "  (= " + out["closed_form"].get<std::string>() + ")" : "  (MISMATCH)"));
    if (!eq) exit_code = kExitVerifyFailed;
  });

  auto* co_full = cocycle->add_subcommand("full", "full cocycle value with coefficients");
  add_sig(co_full);
  std::string co_a;
  co_full->add_option("--a", co_a, "fundamental weight coefficients a_1,...,a_n");
  co_full->callback([&]() {
    auto a = parse_parts(co_a);
    dp_poly* raw = nullptr;
    check(dp_full_cocycle_value(co_p, co_q, co_n, a.data(), a.size(), &raw));
    PolyPtr value = wrap(raw);
    int harm = 0;
    check(dp_poly_is_pluriharmonic(value.get(), &harm));
    // Closed form: product of Delta_k^{a_k}, with Delta_n^{a_n+q}.
    PolyPtr closed(nullptr, &dp_poly_free);
    {
      dp_poly* acc = nullptr;
      check(dp_poly_parse(co_p, co_q, co_n, "1", &acc));
      closed = wrap(acc);
      for (size_t k = 1; k <= static_cast<size_t>(co_n); ++k) {
        int64_t e = (k <= a.size() ? a[k - 1] : 0) + (static_cast<int64_t>(k) == co_n ? co_q : 0);
        if (e == 0) continue;
        dp_poly* mraw = nullptr;
        check(dp_minor_delta(co_p, co_q, co_n, static_cast<int64_t>(k), &mraw));
        PolyPtr mk = wrap(mraw);
        for (int64_t i = 0; i < e; ++i) {
          dp_poly* next = nullptr;
          check(dp_poly_mul(closed.get(), mk.get(), &next));
          closed = wrap(next);
        }
      }
    }
    int eq = 0;
    check(dp_poly_equal(value.get(), closed.get(), &eq));
    json out = poly_report(value.get());
    out["matches_closed_form"] = (eq == 1);
    out["pluriharmonic"] = (harm == 1);
    std::ostringstream cf;
    for (size_t k = 1; k <= static_cast<size_t>(co_n); ++k) {
      int64_t e = (k <= a.size() ? a[k - 1] : 0) + (static_cast<int64_t>(k) == co_n ? co_q : 0);
      if (e > 0) cf << "Delta_" << k << "^" << e << " ";
    }
    out["closed_form"] = cf.str();
    emit(out, "value " + std::string(eq ? "matches " : "DIFFERS from ") + cf.str());
    if (!eq || !harm) exit_code = kExitVerifyFailed;
  });

  auto* co_verify = cocycle->add_subcommand("verify", "check the closed-form identity");
  add_sig(co_verify);
  co_verify->callback([&]() {
    dp_poly* raw = nullptr;
    check(dp_km_value_on_vz(co_p, co_q, co_n, &raw));
    PolyPtr value = wrap(raw);
    dp_poly* mraw = nullptr;
    check(dp_minor_delta(co_p, co_q, co_n, co_n, &mraw));
    PolyPtr mk = wrap(mraw);
    PolyPtr closed(nullptr, &dp_poly_free);
    {
      dp_poly* acc = nullptr;
      check(dp_poly_parse(co_p, co_q, co_n, "1", &acc));
      closed = wrap(acc);
      for (int64_t i = 0; i < co_q; ++i) {
        dp_poly* next = nullptr;
        check(dp_poly_mul(closed.get(), mk.get(), &next));
        closed = wrap(next);
      }
    }
    int eq = 0, harm = 0;
    check(dp_poly_equal(value.get(), closed.get(), &eq));
    check(dp_poly_is_pluriharmonic(value.get(), &harm));
    json out{{"p", co_p},
             {"q", co_q},
             {"n", co_n},
             {"matches_closed_form", eq == 1},
             {"pluriharmonic", harm == 1},
             {"closed_form", "Delta_" + std::to_string(co_n) + "^" + std::to_string(co_q)}};
    emit(out, std::string(eq ? "match: " : "MISMATCH: ") + "phi(e(q)) vs Delta_" +
                  std::to_string(co_n) + "^" + std::to_string(co_q));
    if (!eq || !harm) exit_code = kExitVerifyFailed;
  });

  auto* co_fmzero = cocycle->add_subcommand("fm-zero", "zero cochain monomial");
  add_sig(co_fmzero);
  std::string fm_I, fm_beta;
  co_fmzero->add_option("--I", fm_I, "copy indices i_1,...,i_l")->required();
  co_fmzero->add_option("--beta", fm_beta, "site indices beta_1,...,beta_l")->required();
  co_fmzero->callback([&]() {
    auto I = parse_parts(fm_I), beta = parse_parts(fm_beta);
    if (I.size() != beta.size()) throw CliError{kExitUsage, "--I and --beta lengths differ"};
    dp_poly* raw = nullptr;
    check(dp_fm_zero(co_p, co_q, co_n, I.data(), beta.data(), I.size(), &raw));
    PolyPtr value = wrap(raw);
    json out = poly_report(value.get());
    emit(out, out["text"].get<std::string>());
  });

  auto* co_ktype = cocycle->add_subcommand("ktype", "Vogan-Zuckerman K-type weight");
  int64_t kt_n = 0, kt_q = 0, kt_p = -1;
  std::string kt_lam;
  co_ktype->add_option("--n", kt_n)->required();
  co_ktype->add_option("--q", kt_q)->required();
  co_ktype->add_option("--lam", kt_lam, "coefficient highest weight (partition)");
  co_ktype->add_option("--p", kt_p, "report the m/2 determinant twist");
  co_ktype->callback([&]() {
    auto lam = parse_parts(kt_lam);
    char* js = nullptr;
    check(dp_vz_ktype_weight(kt_n, kt_q, lam.data(), lam.size(), kt_p, &js));
    json out = json::parse(take_string(js));
    emit(out, "K-type weight " + out["weight"].dump());
  });

  // ---------------- euler ----------------
  auto* euler = app.add_subcommand("euler", "Euler form and curvature forms");
  int64_t eu_p = 0, eu_q = 0, eu_pow = 1, eu_mu = 0, eu_nu = 0;
  euler->add_option("--p", eu_p)->required();
  euler->add_option("--q", eu_q)->required();
  euler->add_option("--power", eu_pow, "wedge power k of e_q");
  euler->add_option("--curvature-mu", eu_mu, "emit Omega_{mu,nu} instead (with --curvature-nu)");
  euler->add_option("--curvature-nu", eu_nu);
  euler->callback([&]() {
    MvPtr mv(nullptr, &dp_mv_free);
    std::string what;
    if (eu_mu > 0 || eu_nu > 0) {
      dp_multivector* raw = nullptr;
      check(dp_curvature_form(eu_p, eu_q, eu_mu, eu_nu, &raw));
      mv = wrap(raw);
      what = "Omega_{" + std::to_string(eu_mu) + "," + std::to_string(eu_nu) + "}";
    } else {
      dp_multivector* raw = nullptr;
      check(dp_euler_form(eu_p, eu_q, &raw));
      MvPtr base = wrap(raw);
      dp_multivector* acc = nullptr;
      check(dp_mv_clone(base.get(), &acc));
      mv = wrap(acc);
      what = "e_" + std::to_string(eu_q);
      for (int64_t i = 1; i < eu_pow; ++i) {
        dp_multivector* next = nullptr;
        check(dp_mv_wedge(mv.get(), base.get(), &next));
        mv = wrap(next);
      }
      if (eu_pow > 1) what += "^" + std::to_string(eu_pow);
    }
    int zero = 0;
    check(dp_mv_is_zero(mv.get(), &zero));
    char* js = nullptr;
    check(dp_mv_to_json(mv.get(), &js));
    json out{{"form", what}, {"is_zero", zero == 1}, {"value", json::parse(take_string(js))}};
    emit(out, what + (zero ? " = 0" : " != 0"));
  });

  // ---------------- vz ----------------
  auto* vz = app.add_subcommand("vz", "theta-stable parabolic bookkeeping");
  vz->require_subcommand(1);

  auto* vz_dim = vz->add_subcommand("dim-u", "dim(u cap p) for a Levi datum");
  std::string vzd_levi;
  int64_t vzd_p = 0, vzd_q = 0;
  vz_dim->add_option("--levi", vzd_levi, "Levi JSON")->required();
  vz_dim->add_option("--p", vzd_p);
  vz_dim->add_option("--q", vzd_q);
  vz_dim->callback([&]() {
    fill_signature_from_levi(vzd_levi, vzd_p, vzd_q);
    int64_t d = 0;
    check(dp_dim_u_cap_p(vzd_levi.c_str(), vzd_p, vzd_q, &d));
    emit(json{{"levi", json::parse(vzd_levi)}, {"p", vzd_p}, {"q", vzd_q}, {"R", d}},
         "R = dim(u cap p) = " + std::to_string(d));
  });

  auto* vz_low = vz->add_subcommand("low-degree", "Levi data with a given small R");
  int64_t vzl_R = 0, vzl_p = 0, vzl_q = 0;
  vz_low->add_option("--R", vzl_R)->required();
  vz_low->add_option("--p", vzl_p)->required();
  vz_low->add_option("--q", vzl_q)->required();
  vz_low->callback([&]() {
    char* js = nullptr;
    check(dp_low_degree_levis(vzl_R, vzl_p, vzl_q, &js));
    json levis = json::parse(take_string(js));
    emit(json{{"R", vzl_R}, {"p", vzl_p}, {"q", vzl_q}, {"levis", levis}},
         std::to_string(levis.size()) + " Levi shapes with R = " + std::to_string(vzl_R));
  });

  auto* vz_coh = vz->add_subcommand("cohomology", "worked (g,K)-cohomology tables");
  std::string vzc_family;
  int64_t vzc_n = 0, vzc_param = 0;
  vz_coh->add_option("--family", vzc_family,
                     "so_n_1_trivial | so_n_1_weight1 | so_n_2_trivial")
      ->required();
  vz_coh->add_option("--n", vzc_n)->required();
  vz_coh->add_option("--parameter", vzc_param, "module index q resp. r");
  vz_coh->callback([&]() {
    char* js = nullptr;
    check(dp_cohomology_degrees(vzc_family.c_str(), vzc_n, vzc_param, &js));
    json out = json::parse(take_string(js));
    out["family"] = vzc_family;
    out["n"] = vzc_n;
    out["parameter"] = vzc_param;
    emit(out, "degrees " + out["degrees"].dump());
  });

  // ---------------- arthur ----------------
  auto* arthur = app.add_subcommand("arthur", "archimedean Arthur parameter calculus");
  arthur->require_subcommand(1);

  auto* ar_val = arthur->add_subcommand("validate", "validate a parameter");
  std::string arv_psi;
  ar_val->add_option("--psi", arv_psi, "parameter JSON")->required();
  ar_val->callback([&]() {
    char* js = nullptr;
    check(dp_arthur_validate(arv_psi.c_str(), &js));
    json out = json::parse(take_string(js));
    emit(out, out["valid"].get<bool>() ? "valid" : ("invalid: " + out.value("error", "")));
  });

  auto* ar_inf = arthur->add_subcommand("infchar", "infinitesimal character");
  std::string ari_psi;
  ar_inf->add_option("--psi", ari_psi, "parameter JSON")->required();
  ar_inf->callback([&]() {
    char* js = nullptr;
    check(dp_infinitesimal_character(ari_psi.c_str(), &js));
    json out = json::parse(take_string(js));
    emit(out, "nu_Psi = " + out["entries"].dump() +
                  (out["regular"].get<bool>() ? " (regular)" : " (not regular)"));
  });

  auto* ar_exp = arthur->add_subcommand("exponents", "exponent multiset Exp(pi)");
  std::string are_psi, are_levi, are_reading = "paired";
  int64_t are_p = 0, are_q = 0;
  ar_exp->add_option("--psi", are_psi, "parameter JSON");
  ar_exp->add_option("--levi", are_levi, "Levi JSON (builds the AJ parameter first)");
  ar_exp->add_option("--p", are_p);
  ar_exp->add_option("--q", are_q);
  ar_exp->add_option("--reading", are_reading, "paired (default) or scaled");
  ar_exp->callback([&]() {
    std::string psi = are_psi;
    if (psi.empty()) {
      if (are_levi.empty()) throw CliError{kExitUsage, "need --psi or --levi"};
      fill_signature_from_levi(are_levi, are_p, are_q);
      char* pj = nullptr;
      check(dp_aj_parameter(are_levi.c_str(), are_p, are_q, &pj));
      psi = take_string(pj);
    }
    char* js = nullptr;
    check(dp_exponents(psi.c_str(), are_reading.c_str(), &js));
    json out = json::parse(take_string(js));
    out["psi"] = json::parse(psi);
    emit(out, "Exp(pi) = " + out["exponents"].dump());
  });

  auto* ar_aj = arthur->add_subcommand("aj-param", "Adams-Johnson parameter of a Levi");
  std::string ara_levi;
  int64_t ara_p = 0, ara_q = 0;
  ar_aj->add_option("--levi", ara_levi, "Levi JSON")->required();
  ar_aj->add_option("--p", ara_p);
  ar_aj->add_option("--q", ara_q);
  ar_aj->callback([&]() {
    fill_signature_from_levi(ara_levi, ara_p, ara_q);
    char* js = nullptr;
    check(dp_aj_parameter(ara_levi.c_str(), ara_p, ara_q, &js));
    json out = json::parse(take_string(js));
    emit(out, "Psi with " + std::to_string(out["factors"].size()) + " factors, N = " +
                  std::to_string(2 * (out["m"].get<long>() / 2)));
  });

  auto* ar_pred = arthur->add_subcommand("predicates", "temperedness and bound predicates");
  std::string arp_psi;
  int64_t arp_n = 0, arp_p = 0, arp_q = 0, arp_r = 0;
  ar_pred->add_option("--psi", arp_psi, "parameter JSON (optional)");
  ar_pred->add_option("--n", arp_n);
  ar_pred->add_option("--p", arp_p);
  ar_pred->add_option("--q", arp_q);
  ar_pred->add_option("--r", arp_r);
  ar_pred->callback([&]() {
    json req{{"n", arp_n}, {"p", arp_p}, {"q", arp_q}, {"r", arp_r}};
    if (!arp_psi.empty()) req["psi"] = json::parse(arp_psi);
    char* js = nullptr;
    check(dp_predicates(req.dump().c_str(), &js));
    json out = json::parse(take_string(js));
    emit(out, out.dump());
  });

  // ---------------- verify ----------------
  auto* verify = app.add_subcommand("verify", "run the paper-identity verification suites");
  std::string ve_suite;
  bool ve_all = false, ve_list = false;
  verify->add_option("--suite", ve_suite, "suite name");
  verify->add_flag("--all", ve_all, "run every suite");
  verify->add_flag("--list", ve_list, "list available suites");
  verify->callback([&]() {
    if (ve_list) {
      char* js = nullptr;
      check(dp_verify_suites(&js));
      json suites = json::parse(take_string(js));
      emit(json{{"suites", suites}}, suites.dump());
      return;
    }
    std::string name = ve_all || ve_suite.empty() ? "all" : ve_suite;
    char* js = nullptr;
    dp_status st = dp_verify(name.c_str(), &js);
    if (st != DP_OK && st != DP_ERR_VERIFY_FAILED) check(st);
    json out = json::parse(take_string(js));
    if (g_human) {
      for (const auto& c : out["checks"])
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                  << "  (" << c["millis"].get<long>() << " ms)  "
                  << c["detail"].get<std::string>() << "\n";
    } else {
      std::cout << out.dump() << "\n";
    }
    if (st == DP_ERR_VERIFY_FAILED) exit_code = kExitVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cout.flush();
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
