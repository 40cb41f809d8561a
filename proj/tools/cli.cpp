#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "howe/errors.hpp"
#include "howe/json_io.hpp"
#include "howe/spec_grammar.hpp"
#include "howe/verify.hpp"

namespace howe::cli {

namespace {

struct TowerArgs {
    int m = 0;
    int m_prime = 0;
    std::optional<int> parity;
    int parity_prime = 0;
    int q = 3;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--m", m, "Witt index of the first group")->required();
        cmd->add_option("--mp", m_prime, "Witt index of the partner group")->required();
        cmd->add_option("--parity", parity, "dimension parity of the first tower (default: parity of k(k+1)/2)");
        cmd->add_option("--parity-p", parity_prime, "dimension parity of the partner tower")->default_val(0);
        cmd->add_option("--q", q, "odd prime power")->default_val(3);
    }
    [[nodiscard]] TowerContext first(int k) const { return {q, parity.value_or(triangular(k) % 2), m}; }
    [[nodiscard]] TowerContext second() const { return {q, parity_prime, m_prime}; }
};

std::string images_text(const Images& images) {
    if (images.empty()) return "zero\n";
    std::ostringstream os;
    for (const auto& [label, mult] : images) os << label.to_string() << " x " << mult << '\n';
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Howe correspondence for finite unitary dual pairs at the Weyl group level", "howe"};
    app.require_subcommand(1);
    bool text = false;
    std::string sgn_name{to_string(LinearCharacter::coxeter_sign)};
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    app.add_flag("--text", text, "aligned text output")->excludes(json_flag);
    app.add_option("--sgn", sgn_name, "linear character used for sgn")
        ->check(CLI::IsMember({"trivial", "sign_changes", "permutation_sign", "coxeter_sign"}));

    std::function<std::string(const HoweOptions&)> action;

    // omega
    auto* omega = app.add_subcommand("omega", "multiplicity table of Omega_{m,m',k}");
    TowerArgs omega_tower;
    int omega_k = 0;
    omega_tower.add_to(omega);
    omega->add_option("--k", omega_k, "cuspidal unipotent index")->required();
    omega->callback([&] {
        action = [&](const HoweOptions& o) {
            const auto t = omega_unipotent(omega_tower.first(omega_k), omega_tower.second(), omega_k, o);
            return text ? format_table_text(t) : dump(json(t));
        };
    });

    // theta / extremal share their arguments
    TowerArgs theta_tower;
    int theta_k = 0;
    std::string alpha, beta;
    auto add_label_args = [&](CLI::App* cmd) {
        theta_tower.add_to(cmd);
        cmd->add_option("--k", theta_k, "cuspidal unipotent index")->default_val(0);
        cmd->add_option("--alpha", alpha, "first partition, comma separated");
        cmd->add_option("--beta", beta, "second partition, comma separated");
    };
    auto theta_label = [&] { return SeriesLabel{theta_k, {parse_partition(alpha), parse_partition(beta)}}; };

    auto* theta = app.add_subcommand("theta", "images of one representation");
    add_label_args(theta);
    theta->callback([&] {
        action = [&](const HoweOptions& o) {
            const auto images = theta_images(theta_label(), theta_tower.first(theta_k), theta_tower.second(), o);
            return text ? images_text(images) : dump(images_json(images));
        };
    });

    auto* extremal = app.add_subcommand("extremal", "minimal and maximal images");
    add_label_args(extremal);
    extremal->callback([&] {
        action = [&](const HoweOptions& o) {
            const auto ex = extremal_images(theta_label(), theta_tower.first(theta_k), theta_tower.second(), o);
            return text ? "min " + ex.min.to_string() + "\nmax " + ex.max.to_string() + "\n"
                        : dump(extremes_json(ex));
        };
    });

    // centralizer
    auto* centralizer = app.add_subcommand("centralizer", "centralizer decomposition of a semisimple class");
    int cz_q = 3, cz_n = 0, cz_degree = 1;
    std::string cz_orbits;
    centralizer->add_option("--q", cz_q, "odd prime power")->default_val(3);
    centralizer->add_option("--n", cz_n, "dimension of the unitary group")->required();
    centralizer->add_option("--orbits", cz_orbits, "exponent^multiplicity list")->required();
    centralizer->add_option("--degree", cz_degree, "exponents are taken modulo q^(2 degree) - 1")->default_val(1);
    centralizer->callback([&] {
        action = [&](const HoweOptions&) {
            const auto s = parse_orbits(cz_orbits, cz_q, cz_degree);
            const auto dec = centralizer_decomposition(s, {cz_q, cz_n % 2, cz_n / 2});
            if (!text) return dump(json(dec));
            std::ostringstream os;
            for (const auto& f : dec.factors) os << f.to_string() << '\n';
            os << "unipotent block U_" << dec.unipotent_block.dimension() << ", l = " << dec.reduction_l << '\n';
            return os.str();
        };
    });

    // transport
    auto* transport = app.add_subcommand("transport", "cuspidal support of the correspondents");
    TowerArgs tr_tower;
    std::string tr_support;
    std::optional<int> tr_k;
    std::string phi_label, phi_partner;
    int phi_witt = 0, phi_partner_witt = 0;
    tr_tower.add_to(transport);
    transport->add_option("--support", tr_support, "GL part, size:label list")->default_val("");
    transport->add_option("--k", tr_k, "unipotent base lambda_k");
    transport->add_option("--phi", phi_label, "opaque cuspidal base label");
    transport->add_option("--phi-witt", phi_witt, "Witt index of the base group");
    transport->add_option("--phi-partner", phi_partner, "label of the base's correspondent");
    transport->add_option("--phi-partner-witt", phi_partner_witt, "first occurrence index of the base");
    transport->callback([&] {
        action = [&](const HoweOptions& o) {
            CuspidalSupport support{parse_gl_part(tr_support), {}};
            if (tr_k) {
                support.base = CuspidalBase::unipotent(*tr_k);
            } else {
                if (phi_label.empty()) throw ValidationError("transport needs --k or --phi");
                support.base = {std::nullopt, phi_label, phi_witt, phi_partner, phi_partner_witt};
            }
            const auto moved = transport_support(support, tr_tower.first(tr_k.value_or(0)), tr_tower.second(), o);
            if (!moved) return text ? std::string("zero\n") : dump(json{{"zero", true}});
            if (!text) return dump(json{{"zero", false}, {"support", *moved}});
            std::ostringstream os;
            for (const auto& g : moved->gl_part) os << g.size << ':' << g.label << ' ';
            os << "| " << moved->base.label << '\n';
            return os.str();
        };
    });

    // omega-full
    auto* full = app.add_subcommand("omega-full", "Omega_{m,m',rho} reduced to the unipotent case");
    TowerArgs full_tower;
    std::string full_pair, full_orbits;
    int full_k = 0, full_degree = 1;
    full_tower.add_to(full);
    full->add_option("--pair", full_pair, "GL part of the cuspidal pair, size:label list")->default_val("");
    full->add_option("--k", full_k, "cuspidal unipotent index of the unipotent part")->default_val(0);
    full->add_option("--orbits", full_orbits, "semisimple class, exponent^multiplicity list (default trivial)");
    full->add_option("--degree", full_degree, "exponents are taken modulo q^(2 degree) - 1")->default_val(1);
    full->callback([&] {
        action = [&](const HoweOptions& o) {
            CuspidalPair pair{parse_gl_part(full_pair), full_k, std::nullopt};
            if (!full_orbits.empty()) pair.semisimple = parse_orbits(full_orbits, full_tower.q, full_degree);
            // The first tower's parity defaults to that of the semisimple class's dimension.
            TowerContext ctx = full_tower.first(full_k);
            if (!full_tower.parity && pair.semisimple) ctx.dim_parity = pair.semisimple->dimension() % 2;
            const auto dec = omega_full(pair, ctx, full_tower.second(), o);
            if (!dec) return text ? std::string("zero\n") : dump(json{{"zero", true}});
            if (!text) return dump(json{{"zero", false}, {"decomposition", *dec}});
            std::ostringstream os;
            os << "# part:";
            for (const auto& f : dec->hash_factors) os << ' ' << f.to_string();
            os << " (diagonal pairing), l = " << dec->reduction_l << ", l' = " << dec->reduction_l_prime << '\n'
               << format_table_text(dec->unipotent_table);
            return os.str();
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle verification suite");
    int max_rank = kDefaultOracleBound;
    verify_cmd->add_option("--max-rank", max_rank, "largest Weyl group rank checked against the oracle")
        ->default_val(kDefaultOracleBound)
        ->check(CLI::Range(0, kMaxEnumerableRank));
    bool verify_failed = false;
    verify_cmd->callback([&] {
        action = [&](const HoweOptions& o) {
            set_oracle_rank_bound(std::max(max_rank, oracle_rank_bound()));
            const auto results = verify::run_verification(max_rank, o);
            verify_failed = std::any_of(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
            if (!text) {
                json list = json::array();
                for (const auto& r : results) list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                return dump(json{{"properties", list}, {"all_passed", !verify_failed}});
            }
            std::ostringstream os;
            for (const auto& r : results)
                os << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << '\n';
            os << (verify_failed ? "some properties failed" : "all properties passed") << '\n';
            return os.str();
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        HoweOptions options;
        options.sgn = parse_linear_character(sgn_name);
        out << action(options);
        return verify_failed ? 2 : 0;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace howe::cli
