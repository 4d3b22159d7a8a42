// Command-line front end: cosets, factor, construct, enumerate, survey,
// code {describe, matrices}, odsm {setup, mask, check, sweep}. All output is
// deterministic for fixed flags and seed; machine-readable errors go to
// stderr with exit status 1, usage problems exit with 2.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hermlcd/constructions.hpp"
#include "hermlcd/odsm.hpp"

using json = nlohmann::ordered_json;
using namespace hermlcd;

namespace {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("HERMLCD_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            fail(errc::usage_error, "HERMLCD_BUDGET is not a number");
        }
    }
    return cyclic::kDefaultBudget;
}

std::vector<gf::elem> parse_vec(const std::string& text, const gf::Field& f) {
    std::vector<gf::elem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(f.element(std::stoull(item)));
        } catch (const error&) {
            throw;
        } catch (...) {
            fail(errc::usage_error, "bad vector entry: " + item);
        }
    }
    return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    require(q >= 2, errc::out_of_range, "q must be at least 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned a = 0;
    std::uint64_t t = q;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++a;
    }
    require(t == 1, errc::not_prime, "q must be a prime power");
    return {p, a};
}

gf::FieldPtr alphabet(std::uint64_t q) {
    auto [p, a] = prime_power(q);
    return gf::Field::make(p, 2 * a);
}

json field_json(const gf::Field& f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"size", f.size()}};
}

json vec_json(const std::vector<gf::elem>& v) { return json(v); }

json distance_json(const cyclic::DistanceReport& r) {
    json j;
    j["d"] = r.exact ? json(*r.exact) : json(nullptr);
    j["lower"] = r.lower;
    j["method"] = cyclic::method_name(r.method);
    j["work"] = r.work;
    j["budget_exceeded"] = r.budget_exceeded;
    return j;
}

json code_json(const cyclic::Code& c, const std::optional<cyclic::DistanceReport>& dist) {
    json j;
    j["n"] = c.n();
    j["k"] = c.k();
    j["q"] = c.field()->conj_q();
    j["field"] = field_json(*c.field());
    j["generator"] = vec_json(c.generator().c);
    j["defining_set"] = json(c.defining_set().elems);
    j["hermitian_lcd"] = cyclic::is_hermitian_lcd(c);
    j["bch_bound"] = cyclic::bch_lower_bound(c);
    j["distance"] = dist ? distance_json(*dist) : json(nullptr);
    return j;
}

json report_json(const constructions::Report& r,
                 const std::optional<cyclic::DistanceReport>& dist) {
    json j;
    j["family"] = constructions::family_name(r.params.family);
    j["q"] = r.params.q;
    if (r.params.family == constructions::Family::hop)
        j["t"] = r.params.t_or_m;
    else
        j["m"] = r.params.t_or_m;
    j["delta"] = r.params.delta;
    if (r.params.family == constructions::Family::primitive_g1) j["e"] = r.params.e;
    j["field"] = field_json(*r.code.field());
    j["n"] = r.code.n();
    j["k"] = r.code.k();
    j["k_formula"] = r.k_formula ? json(*r.k_formula) : json(nullptr);
    j["k_actual"] = r.k_actual;
    j["k_match"] = r.k_match;
    j["d_bound_formula"] = r.d_bound_formula ? json(*r.d_bound_formula) : json(nullptr);
    j["bch_bound"] = r.bch_bound;
    j["hermitian_lcd"] = r.hlcd;
    j["degenerate"] = r.degenerate;
    j["generator"] = vec_json(r.code.generator().c);
    j["distance"] = dist ? distance_json(*dist) : json(nullptr);
    return j;
}

// code selection shared by construct/survey/code/odsm
struct CodeSelect {
    std::string family;
    unsigned t = 1;
    std::uint64_t q = 2;
    unsigned m = 2;
    std::uint64_t delta = 4;
    std::uint64_t e = 1;
    std::string generator_file;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--family", family, "code family: hop, g1 or g2");
        cmd->add_option("--t", t, "hop family parameter t");
        cmd->add_option("--q", q, "small-field size q (alphabet GF(q^2))");
        cmd->add_option("--m", m, "extension order m");
        cmd->add_option("--delta", delta, "designed distance");
        cmd->add_option("--e", e, "offset divisor e | q+1 (g1)");
        cmd->add_option("--generator", generator_file,
                        "file with a generator polynomial: 'n p k' header then "
                        "coefficients, constant term first");
    }

    cyclic::Code build() const {
        if (!generator_file.empty()) {
            std::ifstream in(generator_file);
            require(static_cast<bool>(in), errc::usage_error,
                    "cannot open " + generator_file);
            std::uint64_t n = 0, p = 0;
            unsigned k = 0;
            require(static_cast<bool>(in >> n >> p >> k), errc::usage_error,
                    "generator file needs a 'n p k' header");
            auto field = gf::Field::make(p, k);
            std::vector<std::uint64_t> coeffs;
            std::uint64_t v;
            while (in >> v) coeffs.push_back(v);
            auto ctx = polyring::make_context(field, n);
            return cyclic::Code::from_generator(ctx, polyring::make_poly(field, coeffs));
        }
        if (family == "hop") return constructions::construct_hop(t).code;
        if (family == "g1") return constructions::construct_g1(q, m, delta, e).code;
        if (family == "g2") return constructions::construct_g2(m, delta).code;
        fail(errc::usage_error, "select a code via --family or --generator");
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        require(static_cast<bool>(out), errc::usage_error, "cannot write " + out_path);
        out << text;
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic Hermitian LCD code toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::uint64_t budget = cyclic::kDefaultBudget;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--budget", budget, "enumeration work budget");

    std::string result;  // every subcommand deposits its bytes here

    // cosets
    auto* sc_cosets = app.add_subcommand("cosets", "Q-cyclotomic coset partition");
    std::uint64_t co_n = 0, co_Q = 4;
    bool co_json = false;
    sc_cosets->add_option("--n", co_n, "modulus")->required();
    sc_cosets->add_option("--base-q", co_Q, "coset base Q (the alphabet size)");
    sc_cosets->add_flag("--json", co_json, "emit JSON");
    sc_cosets->callback([&] {
        auto t = cosets::coset_table(co_n, co_Q);
        json j;
        j["n"] = t.n;
        j["m"] = t.m;
        json arr = json::array();
        for (auto s : t.leaders)
            arr.push_back(json{{"leader", s}, {"members", t.coset_of(s)}});
        j["cosets"] = arr;
        if (co_json) {
            result = dump(j);
        } else {
            std::ostringstream os;
            os << "n=" << t.n << " m=" << t.m << " cosets=" << t.leaders.size() << "\n";
            for (auto s : t.leaders) {
                os << s << ":";
                for (auto e : t.coset_of(s)) os << " " << e;
                os << "\n";
            }
            result = os.str();
        }
    });

    // factor
    auto* sc_factor = app.add_subcommand("factor", "conjugate-reciprocal split of x^n-1");
    std::uint64_t fa_n = 0, fa_q = 2;
    bool fa_json = false;
    sc_factor->add_option("--n", fa_n, "length")->required();
    sc_factor->add_option("--q", fa_q, "small-field size q (alphabet GF(q^2))");
    sc_factor->add_flag("--json", fa_json, "emit JSON");
    sc_factor->callback([&] {
        auto field = alphabet(fa_q);
        auto ctx = polyring::make_context(field, fa_n);
        auto split = polyring::factor_split(*ctx);
        json j;
        j["n"] = fa_n;
        j["q"] = fa_q;
        j["field"] = field_json(*field);
        j["u"] = split.u();
        j["v"] = split.v();
        json selfs = json::array();
        for (std::size_t i = 0; i < split.u(); ++i)
            selfs.push_back(json{{"leader", split.self_leaders[i]},
                                 {"coeffs", vec_json(split.self_factors[i].c)}});
        json pairs = json::array();
        for (std::size_t i = 0; i < split.v(); ++i)
            pairs.push_back(
                json{{"leaders",
                      {split.pair_leaders[i].first, split.pair_leaders[i].second}},
                     {"f", vec_json(split.pair_factors[i].first.c)},
                     {"f_conj_reciprocal", vec_json(split.pair_factors[i].second.c)}});
        j["self_conjugate"] = selfs;
        j["paired"] = pairs;
        if (fa_json) {
            result = dump(j);
        } else {
            std::ostringstream os;
            os << "n=" << fa_n << " u=" << split.u() << " v=" << split.v()
               << " hlcd_count=2^" << (split.u() + split.v()) << "\n";
            result = os.str();
        }
    });

    // construct
    auto* sc_con = app.add_subcommand("construct", "build a family member");
    CodeSelect con_sel;
    con_sel.add_options(sc_con);
    std::string con_distance = "off";
    bool con_json = false;
    sc_con->add_option("--distance", con_distance, "distance engine: auto or off");
    sc_con->add_flag("--json", con_json, "emit JSON");
    sc_con->callback([&] {
        require(con_distance == "auto" || con_distance == "off", errc::usage_error,
                "--distance must be auto or off");
        constructions::Report rep;
        if (con_sel.family == "hop")
            rep = constructions::construct_hop(con_sel.t);
        else if (con_sel.family == "g1")
            rep = constructions::construct_g1(con_sel.q, con_sel.m, con_sel.delta,
                                              con_sel.e);
        else if (con_sel.family == "g2")
            rep = constructions::construct_g2(con_sel.m, con_sel.delta);
        else
            fail(errc::usage_error, "--family must be hop, g1 or g2");
        std::optional<cyclic::DistanceReport> dist;
        if (con_distance == "auto" && rep.code.k() > 0)
            dist = cyclic::min_distance(rep.code, cyclic::DistanceMethod::auto_pick, budget);
        json j = report_json(rep, dist);
        if (con_json) {
            result = dump(j);
        } else {
            std::ostringstream os;
            os << "[" << rep.code.n() << ", " << rep.code.k();
            if (dist && dist->exact) os << ", " << *dist->exact;
            os << "] bch>=" << rep.bch_bound << " hlcd=" << (rep.hlcd ? "yes" : "no")
               << " k_match=" << (rep.k_match ? "yes" : "no") << "\n";
            result = os.str();
        }
    });

    // enumerate
    auto* sc_enum = app.add_subcommand("enumerate", "count/list Hermitian LCD cyclic codes");
    std::uint64_t en_n = 0, en_q = 2;
    bool en_json = false, en_list = false;
    sc_enum->add_option("--n", en_n, "length")->required();
    sc_enum->add_option("--q", en_q, "small-field size q");
    sc_enum->add_flag("--list", en_list, "include one entry per code");
    sc_enum->add_flag("--json", en_json, "emit JSON");
    sc_enum->callback([&] {
        auto field = alphabet(en_q);
        auto ctx = polyring::make_context(field, en_n);
        auto en = constructions::enumerate_hlcd(ctx);
        json j;
        j["n"] = en_n;
        j["q"] = en_q;
        j["u"] = en.split.u();
        j["v"] = en.split.v();
        j["count"] = en.count;
        if (en_list) {
            json codes = json::array();
            constructions::for_each_hlcd(
                ctx, en, [&](std::uint64_t mask, const cyclic::Code& c) {
                    codes.push_back(json{{"mask", mask},
                                         {"k", c.k()},
                                         {"generator", vec_json(c.generator().c)},
                                         {"bch_bound", cyclic::bch_lower_bound(c)}});
                });
            j["codes"] = codes;
        }
        if (en_json) {
            result = dump(j);
        } else {
            std::ostringstream os;
            os << "n=" << en_n << " count=" << en.count << " (u=" << en.split.u()
               << ", v=" << en.split.v() << ")\n";
            result = os.str();
        }
    });

    // survey
    auto* sc_sur = app.add_subcommand("survey", "CSV table over a parameter range");
    CodeSelect sur_sel;
    sur_sel.add_options(sc_sur);
    std::string sur_delta_range, sur_t_range;
    std::string sur_distance = "off";
    sc_sur->add_option("--delta-range", sur_delta_range, "a:b inclusive (g1/g2)");
    sc_sur->add_option("--t-range", sur_t_range, "a:b inclusive (hop)");
    sc_sur->add_option("--distance", sur_distance, "distance engine: auto or off");
    sc_sur->callback([&] {
        auto parse_range = [](const std::string& s) {
            auto pos = s.find(':');
            require(pos != std::string::npos && pos > 0, errc::usage_error,
                    "range must be a:b");
            return std::pair<std::uint64_t, std::uint64_t>{
                std::stoull(s.substr(0, pos)), std::stoull(s.substr(pos + 1))};
        };
        std::ostringstream os;
        os << "n,q,delta,k_formula,k_actual,bch_bound,d_exact,hlcd\n";
        auto emit_row = [&](const constructions::Report& rep) {
            std::optional<cyclic::DistanceReport> dist;
            if (sur_distance == "auto" && rep.code.k() > 0)
                dist = cyclic::min_distance(rep.code, cyclic::DistanceMethod::auto_pick,
                                            budget);
            os << rep.code.n() << "," << rep.params.q << "," << rep.params.delta << ",";
            if (rep.k_formula) os << *rep.k_formula;
            os << "," << rep.k_actual << "," << rep.bch_bound << ",";
            if (dist && dist->exact) os << *dist->exact;
            os << "," << (rep.hlcd ? "true" : "false") << "\n";
        };
        if (sur_sel.family == "hop") {
            auto [a, b] = parse_range(sur_t_range.empty() ? "1:3" : sur_t_range);
            for (std::uint64_t t = a; t <= b; ++t)
                emit_row(constructions::construct_hop(static_cast<unsigned>(t)));
        } else if (sur_sel.family == "g1") {
            auto [a, b] = parse_range(sur_delta_range);
            for (std::uint64_t d = a; d <= b; ++d)
                emit_row(constructions::construct_g1(sur_sel.q, sur_sel.m, d, sur_sel.e));
        } else if (sur_sel.family == "g2") {
            auto [a, b] = parse_range(sur_delta_range);
            for (std::uint64_t d = a; d <= b; ++d)
                emit_row(constructions::construct_g2(sur_sel.m, d));
        } else {
            fail(errc::usage_error, "--family must be hop, g1 or g2");
        }
        result = os.str();
    });

    // code describe / matrices
    auto* sc_code = app.add_subcommand("code", "inspect a single code");
    sc_code->require_subcommand(1);
    auto* sc_desc = sc_code->add_subcommand("describe", "JSON summary");
    CodeSelect desc_sel;
    desc_sel.add_options(sc_desc);
    std::string desc_distance = "auto";
    sc_desc->add_option("--distance", desc_distance, "distance engine: auto or off");
    sc_desc->callback([&] {
        cyclic::Code c = desc_sel.build();
        std::optional<cyclic::DistanceReport> dist;
        if (desc_distance == "auto" && c.k() > 0)
            dist = cyclic::min_distance(c, cyclic::DistanceMethod::auto_pick, budget);
        result = dump(code_json(c, dist));
    });
    auto* sc_mat = sc_code->add_subcommand("matrices", "G and H in matrix text format");
    CodeSelect mat_sel;
    mat_sel.add_options(sc_mat);
    sc_mat->callback([&] {
        cyclic::Code c = mat_sel.build();
        result = linalg::matrix_to_text(cyclic::generator_matrix(c)) +
                 linalg::matrix_to_text(cyclic::check_matrix(c));
    });

    // odsm
    auto* sc_odsm = app.add_subcommand("odsm", "orthogonal direct sum masking");
    sc_odsm->require_subcommand(1);
    auto* sc_setup = sc_odsm->add_subcommand("setup", "print instance matrices");
    CodeSelect setup_sel;
    setup_sel.add_options(sc_setup);
    bool setup_json = false;
    sc_setup->add_flag("--json", setup_json, "emit JSON");
    sc_setup->callback([&] {
        auto inst = odsm::Instance::setup(setup_sel.build());
        if (setup_json) {
            json j;
            j["n"] = inst.n();
            j["k"] = inst.k();
            j["field"] = field_json(inst.field());
            j["G"] = vec_json(inst.G().a);
            j["H"] = vec_json(inst.H().a);
            result = dump(j);
        } else {
            result = linalg::matrix_to_text(inst.G()) + linalg::matrix_to_text(inst.H());
        }
    });

    auto* sc_mask = sc_odsm->add_subcommand("mask", "z = xG + yH");
    CodeSelect mask_sel;
    mask_sel.add_options(sc_mask);
    std::string mask_x, mask_y;
    std::uint64_t mask_seed = 0;
    bool mask_json = false;
    sc_mask->add_option("--x", mask_x, "sensitive word, comma separated")->required();
    sc_mask->add_option("--y", mask_y, "mask word, comma separated");
    auto* seed_opt = sc_mask->add_option("--seed", mask_seed, "draw y from this seed");
    sc_mask->add_flag("--json", mask_json, "emit JSON");
    sc_mask->callback([&] {
        auto inst = odsm::Instance::setup(mask_sel.build());
        const gf::Field& f = inst.field();
        auto x = parse_vec(mask_x, f);
        std::vector<gf::elem> y;
        if (seed_opt->count() > 0) {
            odsm::SplitMix64 rng(mask_seed);
            y.resize(inst.n() - inst.k());
            for (auto& v : y) v = rng.below(f.size());
        } else {
            require(!mask_y.empty(), errc::usage_error, "provide --y or --seed");
            y = parse_vec(mask_y, f);
        }
        auto z = inst.mask(x, y);
        if (mask_json) {
            result =
                dump(json{{"x", vec_json(x)}, {"y", vec_json(y)}, {"z", vec_json(z)}});
        } else {
            std::ostringstream os;
            for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i];
            os << "\n";
            result = os.str();
        }
    });

    auto* sc_check = sc_odsm->add_subcommand("check", "verify a faulted state");
    CodeSelect check_sel;
    check_sel.add_options(sc_check);
    std::string check_z, check_eps, check_y;
    bool check_json = false;
    sc_check->add_option("--z", check_z, "masked state")->required();
    sc_check->add_option("--epsilon", check_eps, "fault vector")->required();
    sc_check->add_option("--y", check_y, "expected mask")->required();
    sc_check->add_flag("--json", check_json, "emit JSON");
    sc_check->callback([&] {
        auto inst = odsm::Instance::setup(check_sel.build());
        const gf::Field& f = inst.field();
        auto res = inst.inject_and_check(parse_vec(check_z, f), parse_vec(check_eps, f),
                                         parse_vec(check_y, f));
        if (check_json) {
            result = dump(json{{"detected", res.detected},
                               {"recovered_y", vec_json(res.recovered_y)}});
        } else {
            result = res.detected ? "detected\n" : "undetected\n";
        }
    });

    auto* sc_sweep = sc_odsm->add_subcommand("sweep", "per-weight detection statistics");
    CodeSelect sweep_sel;
    sweep_sel.add_options(sc_sweep);
    unsigned sweep_w = 3;
    std::uint64_t sweep_samples = 100000, sweep_seed = 0;
    bool sweep_json = false;
    sc_sweep->add_option("--max-weight", sweep_w, "largest fault weight");
    sc_sweep->add_option("--samples", sweep_samples, "samples per non-exhaustive weight");
    sc_sweep->add_option("--seed", sweep_seed, "sampling seed");
    sc_sweep->add_flag("--json", sweep_json, "emit JSON");
    sc_sweep->callback([&] {
        auto inst = odsm::Instance::setup(sweep_sel.build());
        odsm::SweepOptions opt;
        opt.budget = budget;
        opt.samples = sweep_samples;
        opt.seed = sweep_seed;
        auto rows = odsm::detection_sweep(inst, sweep_w, opt);
        if (sweep_json) {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back(json{{"weight", r.weight},
                                   {"total", r.total},
                                   {"detected", r.detected},
                                   {"exhaustive", r.exhaustive}});
            result = dump(arr);
        } else {
            std::ostringstream os;
            for (const auto& r : rows)
                os << "w=" << r.weight << " total=" << r.total
                   << " detected=" << r.detected << (r.exhaustive ? "" : " (sampled)")
                   << "\n";
            result = os.str();
        }
    });

    try {
        budget = default_budget();
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        json err{{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }

    try {
        emit(result, out_path);
    } catch (const error& e) {
        json err{{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
