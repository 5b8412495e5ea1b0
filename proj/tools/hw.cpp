// hw: exact double Hurwitz numbers, closed forms, chamber polynomials,
// and wall-crossing checks.
//
// Exit codes: 0 success, 2 usage error, 3 input on a resonance wall,
// 4 internal invariant violation (including failed verification suites).

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <hurwitz/chambers.hpp>
#include <hurwitz/errors.hpp>
#include <hurwitz/fock.hpp>
#include <hurwitz/json_io.hpp>
#include <hurwitz/partitions.hpp>
#include <hurwitz/patterns.hpp>

using namespace hurwitz;

namespace {

int hw_threads() {
    if (const char* env = std::getenv("HW_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Run jobs on up to `threads` workers; results keep job order.
std::vector<bool> run_parallel(const std::vector<std::function<bool()>>& jobs, int threads) {
    std::vector<bool> results(jobs.size());
    if (threads <= 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<char> raw(jobs.size());
    auto worker = [&] {
        for (size_t i = next++; i < jobs.size(); i = next++) raw[i] = jobs[i]() ? 1 : 0;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < jobs.size(); ++i) results[i] = raw[i] != 0;
    return results;
}

struct Check {
    std::string name;
    std::function<bool()> run;
};

int report_checks(std::vector<Check> checks, std::ostream& os) {
    std::vector<std::function<bool()>> jobs;
    for (auto& c : checks) jobs.push_back(c.run);
    std::vector<bool> results = run_parallel(jobs, hw_threads());
    bool all = true;
    for (size_t i = 0; i < checks.size(); ++i) {
        os << (results[i] ? "PASS " : "FAIL ") << checks[i].name << "\n";
        all = all && results[i];
    }
    os << (all ? "OK" : "FAILED") << " (" << checks.size() << " checks)\n";
    return all ? 0 : 4;
}

std::string poly_to_text(const MultiPoly& p, int m, int n) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            os << "*";
            if (static_cast<int>(i) < m)
                os << "mu" << i + 1;
            else
                os << "nu" << i - static_cast<size_t>(m) + 1;
            if (exps[i] > 1) os << "^" << exps[i];
        }
    }
    (void)n;
    return os.str();
}

std::string series_to_text(const LaurentSeries& s) {
    std::ostringstream os;
    for (int k = -s.pole_order(); k <= s.order(); ++k)
        os << "z^" << k << ": " << rat_to_string(s.coeff(k)) << "\n";
    return os.str();
}

// "2,1/1,2": slash-separated 1-based left-to-right orderings for mu and nu.
void parse_order(const std::string& text, int m, int n, std::vector<int>& mu_order,
                 std::vector<int>& nu_order) {
    auto parse_list = [](const std::string& part, int len) {
        std::vector<int> out;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok) - 1);
        std::vector<bool> seen(static_cast<size_t>(len), false);
        if (static_cast<int>(out.size()) != len) throw CLI::ValidationError("--order length mismatch");
        for (int i : out) {
            if (i < 0 || i >= len || seen[static_cast<size_t>(i)])
                throw CLI::ValidationError("--order is not a permutation");
            seen[static_cast<size_t>(i)] = true;
        }
        return out;
    };
    size_t slash = text.find('/');
    if (slash == std::string::npos) throw CLI::ValidationError("--order must be MU_PERM/NU_PERM");
    mu_order = parse_list(text.substr(0, slash), m);
    nu_order = parse_list(text.substr(slash + 1), n);
}

uint32_t parse_mask(const std::vector<int>& indices, int len, const std::string& what) {
    uint32_t mask = 0;
    for (int i : indices) {
        if (i < 1 || i > len) throw CLI::ValidationError(what + " index out of range");
        mask |= 1u << (i - 1);
    }
    return mask;
}

void emit(const std::string& text, const std::string& output_file) {
    if (output_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(output_file);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

std::vector<Check> suite_oracle_equivalence() {
    std::vector<Check> checks;
    for (int d = 1; d <= 6; ++d) {
        for (const Partition& mu : partitions_of(d)) {
            if (mu.length() > 3) continue;
            for (const Partition& nu : partitions_of(d)) {
                if (nu.length() > 3) continue;
                HurwitzInput in{mu, nu};
                if (is_on_wall(in)) continue;
                for (int g = 0; g <= 1; ++g) {
                    int r = in.r_for_genus(g);
                    std::ostringstream name;
                    name << "oracle==closed-form mu=" << json_io::partition_json(mu)
                         << " nu=" << json_io::partition_json(nu) << " r=" << r;
                    checks.push_back({name.str(), [in, r] {
                                          return hurwitz_oracle(in, r) ==
                                                 patterns::hurwitz_number(in, r);
                                      }});
                }
            }
        }
    }
    return checks;
}

bool check_alpha_commutator(const Partition& lambda, int a, int b) {
    int cutoff = static_cast<int>(lambda.size()) + std::abs(a) + std::abs(b) + 1;
    fock::RatVector v;
    v.cutoff = cutoff;
    v.terms.emplace(lambda, Rat(1));
    fock::RatVector ab = fock::apply_alpha(a, fock::apply_alpha(b, v));
    fock::RatVector ba = fock::apply_alpha(b, fock::apply_alpha(a, v));
    fock::RatVector lhs;
    lhs.cutoff = cutoff;
    for (const auto& [k, c] : ab.terms) lhs.add(k, c);
    for (const auto& [k, c] : ba.terms) lhs.add(k, -c);
    fock::RatVector rhs;
    rhs.cutoff = cutoff;
    if (a + b == 0) rhs.add(lambda, Rat(a));
    return lhs.terms == rhs.terms;
}

bool check_mn_wedge(const Partition& mu) {
    int d = static_cast<int>(mu.size());
    fock::RatVector v = fock::vacuum(d);
    for (int i = mu.length() - 1; i >= 0; --i) v = fock::apply_alpha(-mu.part(i), v);
    for (const Partition& lambda : partitions_of(d)) {
        Int chi = character(lambda, mu);
        auto it = v.terms.find(lambda);
        Rat found = it == v.terms.end() ? Rat(0) : it->second;
        if (found != Rat(chi)) return false;
    }
    return v.terms.size() <= partitions_of(d).size();
}

bool check_econj(const Partition& lambda, int n, int N) {
    // e^{zF2} alpha_{-n} e^{-zF2} v_lambda = E_{-n}(nz) v_lambda
    int cutoff = static_cast<int>(lambda.size()) + n;
    long long f_in = central_character_f2(lambda);
    fock::SeriesVector v;
    v.cutoff = cutoff;
    v.terms.emplace(lambda, LaurentSeries::one(N));
    fock::SeriesVector rhs = fock::apply_E(-n, Rat(n), v, N);
    fock::SeriesVector lhs;
    lhs.cutoff = cutoff;
    for (const BorderStrip& s : addable_strips(lambda, n)) {
        long long f_out = central_character_f2(s.result);
        LaurentSeries w = exp_series(Rat(f_out - f_in), N);
        lhs.add(s.result, s.sign > 0 ? w : -w);
    }
    if (lhs.terms.size() != rhs.terms.size()) return false;
    for (const auto& [k, c] : lhs.terms) {
        auto it = rhs.terms.find(k);
        if (it == rhs.terms.end() || !(it->second == c)) return false;
    }
    return true;
}

bool check_e_commutator(const Partition& lambda, int r, int s, int a, int b, int N) {
    // [E_r(az), E_s(bz)] v = sigma((rb - sa) z) E_{r+s}((a+b) z) v
    int cutoff = static_cast<int>(lambda.size()) + std::abs(r) + std::abs(s) + 1;
    fock::SeriesVector v;
    v.cutoff = cutoff;
    v.terms.emplace(lambda, LaurentSeries::one(N));
    fock::SeriesVector rs = fock::apply_E(r, Rat(a), fock::apply_E(s, Rat(b), v, N), N);
    fock::SeriesVector sr = fock::apply_E(s, Rat(b), fock::apply_E(r, Rat(a), v, N), N);
    fock::SeriesVector rhs = fock::apply_E(r + s, Rat(a + b), v, N);
    LaurentSeries factor = sigma_series(Rat(r * b - s * a), N);
    fock::SeriesVector want;
    want.cutoff = cutoff;
    for (const auto& [k, c] : rhs.terms) want.add(k, c * factor);
    fock::SeriesVector got;
    got.cutoff = cutoff;
    for (const auto& [k, c] : rs.terms) got.add(k, c);
    for (const auto& [k, c] : sr.terms) got.add(k, -c);
    for (const auto& [k, c] : got.terms) {
        auto it = want.terms.find(k);
        LaurentSeries w = it == want.terms.end() ? LaurentSeries::zero(N) : it->second;
        if (!c.agrees_with(w)) return false;
    }
    for (const auto& [k, c] : want.terms)
        if (got.terms.find(k) == got.terms.end() && !c.is_zero()) return false;
    return true;
}

bool check_hwedge(const HurwitzInput& in, int r) {
    std::vector<fock::OperatorSymbol> ops;
    for (int i = 0; i < in.m(); ++i) ops.push_back(fock::OperatorSymbol::alpha(in.mu.part(i)));
    for (int k = 0; k < r; ++k) ops.push_back(fock::OperatorSymbol::f2());
    for (int j = 0; j < in.n(); ++j) ops.push_back(fock::OperatorSymbol::alpha(-in.nu.part(j)));
    LaurentSeries ve = fock::vacuum_expectation(ops, 0);
    Rat denom = 1;
    for (int p : in.mu.parts()) denom *= p;
    for (int p : in.nu.parts()) denom *= p;
    return ve.coeff(0) / denom == hurwitz_oracle(in, r);
}

std::vector<Check> suite_fock_identities() {
    std::vector<Check> checks;
    std::vector<Partition> small;
    for (int d = 0; d <= 6; ++d)
        for (const Partition& p : partitions_of(d)) small.push_back(p);

    checks.push_back({"[alpha_n, alpha_m] = n delta_{n,-m} on |lambda| <= 6", [small] {
                          for (const Partition& lambda : small)
                              for (int a = -3; a <= 3; ++a)
                                  for (int b = -3; b <= 3; ++b)
                                      if (a != 0 && b != 0 &&
                                          !check_alpha_commutator(lambda, a, b))
                                          return false;
                          return true;
                      }});
    checks.push_back({"prod alpha_{-mu}|0> = sum chi^lambda_mu v_lambda, d <= 5", [] {
                          for (int d = 1; d <= 5; ++d)
                              for (const Partition& mu : partitions_of(d))
                                  if (!check_mn_wedge(mu)) return false;
                          return true;
                      }});
    checks.push_back({"e^{zF2} alpha_{-n} e^{-zF2} = E_{-n}(nz), |lambda| <= 4", [] {
                          for (int d = 0; d <= 4; ++d)
                              for (const Partition& lambda : partitions_of(d))
                                  for (int n = 1; n <= 3; ++n)
                                      if (!check_econj(lambda, n, 8)) return false;
                          return true;
                      }});
    checks.push_back({"[E_r(az), E_s(bz)] = sigma((rb-sa)z) E_{r+s}((a+b)z)", [] {
                          for (int d = 0; d <= 3; ++d)
                              for (const Partition& lambda : partitions_of(d))
                                  for (int r = -2; r <= 2; ++r)
                                      for (int s = -2; s <= 2; ++s)
                                          for (int a = 1; a <= 2; ++a)
                                              for (int b = 1; b <= 2; ++b) {
                                                  if (r + s == 0 && a + b == 0) continue;
                                                  if (!check_e_commutator(lambda, r, s, a, b, 6))
                                                      return false;
                                              }
                          return true;
                      }});
    checks.push_back({"<prod alpha_mu F2^r prod alpha_-nu> matches oracle, d <= 4", [] {
                          for (int d = 1; d <= 4; ++d)
                              for (const Partition& mu : partitions_of(d))
                                  for (const Partition& nu : partitions_of(d))
                                      for (int r = 0; r <= 4; ++r)
                                          if (!check_hwedge(HurwitzInput{mu, nu}, r)) return false;
                          return true;
                      }});
    return checks;
}

// P_{g,k}/r! = (1 - (1/2)^{2k-1}) |B_{2k}| d^{2k} / (2k)! * P_{g-k,0}/(r-2k)!
// (the relation holds between the z^r series coefficients, so each side is
// divided by its own r! factor).
bool check_bernoulli_relation(const HurwitzInput& sample, int g) {
    using namespace chambers;
    ChamberPolynomial cp = symbolic_polynomial(sample, g);
    MultiPoly d = sym_d(cp.m, cp.n);
    int r = sample.r_for_genus(g);
    for (int k = 1; k <= g; ++k) {
        ChamberPolynomial lower = symbolic_polynomial(sample, g - k);
        Rat c = (1 - Rat(1, Int(1) << (2 * k - 1))) * abs(bernoulli(2 * static_cast<unsigned>(k))) /
                Rat(factorial(2 * static_cast<unsigned>(k)));
        c *= Rat(factorial(static_cast<unsigned>(r))) /
             Rat(factorial(static_cast<unsigned>(r - 2 * k)));
        MultiPoly expect = (d.pow(2 * static_cast<unsigned>(k)) * lower.components[0]).scaled(c);
        if (!(cp.components[static_cast<size_t>(k)] == expect)) return false;
    }
    return true;
}

std::vector<Check> suite_spp() {
    using namespace chambers;
    std::vector<Check> checks;
    std::vector<ChamberSignature> sigs = enumerate_signatures(2, 2, 11);
    for (size_t ci = 0; ci < sigs.size(); ++ci) {
        ChamberSignature sig = sigs[ci];
        std::string base = "spp (2,2) chamber " + std::to_string(ci);
        checks.push_back({base + " degrees/parity/positivity g<=1", [sig] {
                              HurwitzInput sample = sample_in_chamber(sig, 101);
                              for (int g = 0; g <= 1; ++g) {
                                  ChamberPolynomial cp = symbolic_polynomial(sample, g);
                                  std::vector<HurwitzInput> pts;
                                  for (uint64_t s = 1; s <= 3; ++s)
                                      pts.push_back(sample_in_chamber(sig, s));
                                  if (!verify_spp(cp, pts).ok) return false;
                              }
                              return true;
                          }});
        checks.push_back({base + " Bernoulli relation g=1", [sig] {
                              return check_bernoulli_relation(sample_in_chamber(sig, 101), 1);
                          }});
        checks.push_back({base + " matches direct values", [sig] {
                              HurwitzInput sample = sample_in_chamber(sig, 101);
                              ChamberPolynomial cp = symbolic_polynomial(sample, 1);
                              int r = sample.r_for_genus(1);
                              for (uint64_t s = 4; s <= 6; ++s) {
                                  HurwitzInput pt = sample_in_chamber(sig, s, 12);
                                  if (cp.full.eval(sym_point(pt)) !=
                                      patterns::hurwitz_number(pt, r))
                                      return false;
                              }
                              return true;
                          }});
    }
    return checks;
}

bool check_wallcross_case(const HurwitzInput& target, uint32_t I, uint32_t J, int N,
                          uint64_t seed) {
    using namespace chambers;
    WallCrossingSpec w{I, J};
    ChamberSignature sig2 = chamber_signature(target);
    // the chamber on the other side of this wall
    ChamberSignature sig1 = sig2;
    std::vector<Wall> walls = wall_list(sig2.m, sig2.n);
    Wall cw = (I & 1u) ? Wall{I, J}
                       : Wall{((1u << sig2.m) - 1) & ~I, ((1u << sig2.n) - 1) & ~J};
    for (size_t i = 0; i < walls.size(); ++i)
        if (walls[i] == cw) sig1.signs[i] = -sig1.signs[i];
    HurwitzInput p1 = sample_in_chamber(sig1, seed);
    LaurentSeries lhs = wall_crossing_lhs(target, w, p1, target, N);
    LaurentSeries rhs = wall_crossing_rhs(target, w, N);
    return lhs.agrees_with(rhs);
}

std::vector<Check> suite_wallcross() {
    std::vector<Check> checks;
    checks.push_back({"wall crossing (6,1;4,3) across |mu_1|=|nu_1|, z^15", [] {
                          return check_wallcross_case(
                              HurwitzInput{Partition({6, 1}), Partition({4, 3})}, 1u, 1u, 15, 21);
                      }});
    checks.push_back({"wall crossing (7,2;5,4) across |mu_1|=|nu_1|, z^15", [] {
                          return check_wallcross_case(
                              HurwitzInput{Partition({7, 2}), Partition({5, 4})}, 1u, 1u, 15, 22);
                      }});
    checks.push_back({"wall crossing (6,2,1;5,4) across |mu_1|=|nu_1|, z^12", [] {
                          return check_wallcross_case(
                              HurwitzInput{Partition({6, 2, 1}), Partition({5, 4})}, 1u, 1u, 12,
                              23);
                      }});
    return checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact double Hurwitz numbers H^r(mu,nu) and their closed forms"};
    app.set_config("--config", "", "read options from a TOML config file (flags win)");
    app.require_subcommand(1);

    std::vector<int> mu_parts, nu_parts;
    int r = -1, g = -1, N = -1;
    std::string order_text, format = "text", output_file;
    uint64_t seed = 1;
    bool use_oracle = false;

    auto add_common = [&](CLI::App* sub, bool need_parts = true) {
        if (need_parts) {
            sub->add_option("--mu", mu_parts, "parts of mu (comma separated)")
                ->required()
                ->delimiter(',');
            sub->add_option("--nu", nu_parts, "parts of nu (comma separated)")
                ->required()
                ->delimiter(',');
        }
        sub->add_option("--format", format, "output format: text, json, latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--output", output_file, "write output to FILE");
    };

    CLI::App* cmd_hurwitz = app.add_subcommand("hurwitz", "one double Hurwitz number");
    add_common(cmd_hurwitz);
    cmd_hurwitz->add_option("--r", r, "number of simple branch points");
    cmd_hurwitz->add_option("--g", g, "genus (r = 2g-2+m+n)");
    cmd_hurwitz->add_flag("--oracle", use_oracle, "use the character sum (works on walls)");

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "character-sum evaluation");
    add_common(cmd_oracle);
    cmd_oracle->add_option("--r", r, "number of simple branch points");
    cmd_oracle->add_option("--g", g, "genus (r = 2g-2+m+n)");

    CLI::App* cmd_series = app.add_subcommand("series", "H_{mu,nu}(z) through z^N");
    add_common(cmd_series);
    cmd_series->add_option("--N", N, "truncation order (default 10)");
    cmd_series->add_option("--order", order_text, "operator ordering MU_PERM/NU_PERM (1-based)");

    CLI::App* cmd_closed = app.add_subcommand("closed-form", "commutation-pattern closed form");
    add_common(cmd_closed);
    cmd_closed->add_option("--order", order_text, "operator ordering MU_PERM/NU_PERM (1-based)");

    CLI::App* cmd_chamber = app.add_subcommand("chamber", "resonance walls and chamber signature");
    add_common(cmd_chamber);

    CLI::App* cmd_poly = app.add_subcommand("poly", "chamber polynomial P^{c,r}");
    add_common(cmd_poly);
    cmd_poly->add_option("--g", g, "genus")->required();

    CLI::App* cmd_wallcross = app.add_subcommand("wallcross", "check the wall-crossing formula");
    add_common(cmd_wallcross);
    std::vector<int> wall_i, wall_j;
    cmd_wallcross->add_option("--wall-I", wall_i, "mu indices of the wall (1-based)")
        ->required()
        ->delimiter(',');
    cmd_wallcross->add_option("--wall-J", wall_j, "nu indices of the wall (1-based)")
        ->required()
        ->delimiter(',');
    cmd_wallcross->add_option("--N", N, "truncation order (default 15)");
    cmd_wallcross->add_option("--seed", seed, "seed for sampling the far chamber");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a self-verification suite");
    std::string suite;
    cmd_verify->add_option("suite", suite, "oracle-equivalence, fock-identities, spp, wallcross, all")
        ->required()
        ->check(CLI::IsMember({"oracle-equivalence", "fock-identities", "spp", "wallcross", "all"}));
    cmd_verify->add_option("--output", output_file, "write report to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto resolve_r = [&](const HurwitzInput& in) {
            if (r >= 0 && g >= 0 && r != in.r_for_genus(g))
                throw CLI::ValidationError("--r and --g are inconsistent: r = 2g-2+m+n");
            if (r < 0 && g >= 0) return in.r_for_genus(g);
            if (r >= 0) return r;
            throw CLI::ValidationError("one of --r or --g is required");
        };
        auto make_input = [&] { return HurwitzInput{Partition(mu_parts), Partition(nu_parts)}; };

        if (cmd_hurwitz->parsed() || cmd_oracle->parsed()) {
            HurwitzInput in = make_input();
            int rr = resolve_r(in);
            Rat value = (use_oracle || cmd_oracle->parsed()) ? hurwitz_oracle(in, rr)
                                                             : patterns::hurwitz_number(in, rr);
            if (format == "json")
                emit("{\"value\": \"" + rat_to_string(value) + "\"}", output_file);
            else
                emit(rat_to_string(value), output_file);
        } else if (cmd_series->parsed()) {
            HurwitzInput in = make_input();
            if (N < 0) N = 10;
            std::vector<int> mu_order = patterns::default_mu_order(in.m());
            std::vector<int> nu_order = patterns::default_nu_order(in.n());
            if (!order_text.empty()) parse_order(order_text, in.m(), in.n(), mu_order, nu_order);
            patterns::ClosedForm cf = patterns::closed_form(in, mu_order, nu_order);
            LaurentSeries s = patterns::evaluate_series(cf, in, N);
            emit(format == "json" ? json_io::series_json(s) : series_to_text(s), output_file);
        } else if (cmd_closed->parsed()) {
            HurwitzInput in = make_input();
            std::vector<int> mu_order = patterns::default_mu_order(in.m());
            std::vector<int> nu_order = patterns::default_nu_order(in.n());
            if (!order_text.empty()) parse_order(order_text, in.m(), in.n(), mu_order, nu_order);
            patterns::ClosedForm cf = patterns::closed_form(in, mu_order, nu_order);
            if (format == "latex") {
                emit(patterns::to_latex(cf), output_file);
            } else if (format == "json") {
                emit(json_io::closed_form_json(cf), output_file);
            } else {
                std::ostringstream os;
                os << cf.patterns.size() << " pattern(s)\n";
                for (const patterns::CommutationPattern& p : cf.patterns) {
                    os << "  sigma args:";
                    for (long long q : patterns::sigma_args(p, in)) os << " " << q;
                    os << "\n";
                }
                emit(os.str(), output_file);
            }
        } else if (cmd_chamber->parsed()) {
            HurwitzInput in = make_input();
            chambers::ChamberSignature sig = chambers::chamber_signature(in);
            std::vector<chambers::Wall> walls = chambers::wall_list(in.m(), in.n());
            std::ostringstream os;
            if (format == "json") {
                os << "{\"signs\": [";
                for (size_t i = 0; i < sig.signs.size(); ++i)
                    os << (i ? ", " : "") << sig.signs[i];
                os << "]}";
            } else {
                for (size_t i = 0; i < walls.size(); ++i) {
                    os << "wall I={";
                    for (int b = 0; b < in.m(); ++b)
                        if (walls[i].I & (1u << b)) os << " " << b + 1;
                    os << " } J={";
                    for (int b = 0; b < in.n(); ++b)
                        if (walls[i].J & (1u << b)) os << " " << b + 1;
                    os << " }: " << (sig.signs[i] > 0 ? "+" : "-") << "\n";
                }
            }
            emit(os.str(), output_file);
        } else if (cmd_poly->parsed()) {
            HurwitzInput in = make_input();
            if (format == "latex") throw CLI::ValidationError("poly supports text and json only");
            chambers::ChamberPolynomial cp = chambers::symbolic_polynomial(in, g);
            if (format == "json") {
                emit(json_io::chamber_polynomial_json(cp), output_file);
            } else {
                std::ostringstream os;
                os << "P = " << poly_to_text(cp.full, cp.m, cp.n) << "\n";
                for (size_t k = 0; k < cp.components.size(); ++k)
                    os << "P_{g," << k << "} = "
                       << poly_to_text(cp.components[k], cp.m, cp.n) << "\n";
                emit(os.str(), output_file);
            }
        } else if (cmd_wallcross->parsed()) {
            HurwitzInput in = make_input();
            if (N < 0) N = 15;
            uint32_t I = parse_mask(wall_i, in.m(), "--wall-I");
            uint32_t J = parse_mask(wall_j, in.n(), "--wall-J");
            bool ok = check_wallcross_case(in, I, J, N, seed);
            std::ostringstream os;
            os << (ok ? "PASS" : "FAIL") << " wall-crossing identity through z^" << N << "\n"
               << series_to_text(chambers::wall_crossing_rhs(in, {I, J}, N));
            emit(os.str(), output_file);
            if (!ok) return 4;
        } else if (cmd_verify->parsed()) {
            std::vector<Check> checks;
            auto append = [&](std::vector<Check> more) {
                for (auto& c : more) checks.push_back(std::move(c));
            };
            if (suite == "oracle-equivalence" || suite == "all") append(suite_oracle_equivalence());
            if (suite == "fock-identities" || suite == "all") append(suite_fock_identities());
            if (suite == "spp" || suite == "all") append(suite_spp());
            if (suite == "wallcross" || suite == "all") append(suite_wallcross());
            if (output_file.empty()) return report_checks(std::move(checks), std::cout);
            std::ofstream f(output_file);
            return report_checks(std::move(checks), f);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OnWall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
