#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "nervelab/gallery.hpp"
#include "nervelab/json_io.hpp"

namespace {

using namespace nervelab;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitMalformed = 3;

bool g_pretty = true;

void emit(const Json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

int verdict_exit(Verdict3 v) {
    switch (v) {
        case Verdict3::Holds: return kExitHolds;
        case Verdict3::Fails: return kExitFails;
        default: return kExitUnknown;
    }
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw MalformedInput("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

SimplicialComplex load_complex(const std::string& path) {
    return complex_from_json(load_json(path));
}

Cover load_cover(const std::string& path) {
    return cover_from_json(load_json(path), load_json);
}

Carrier load_carrier(const std::string& path) {
    return carrier_from_json(load_json(path), load_json);
}

int run(int argc, char** argv) {
    CLI::App app{"carrier and nerve toolkit for finite simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--format", format, "pretty or compact JSON output")
        ->check(CLI::IsMember({"pretty", "compact"}));

    std::string cover_path, complex_path, complex_path2, carrier_path, carrier_path2,
        map_path, instance_id, star_type = "open", mode = "regular";
    int n = 1;
    bool reduced = false;

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a cover, with witnesses");
    nerve_cmd->add_option("cover", cover_path)->required();

    auto* stars_cmd = app.add_subcommand("stars", "star cover of a complex");
    stars_cmd->add_option("--type", star_type, "open or barycentric")
        ->check(CLI::IsMember({"open", "barycentric"}));
    stars_cmd->add_option("complex", complex_path)->required();

    auto* check_cmd = app.add_subcommand("check-cover", "regularity certificates");
    check_cmd->add_option("--mode", mode, "regular, weak, or n")
        ->check(CLI::IsMember({"regular", "weak", "n"}));
    check_cmd->add_option("--n", n, "degree for n-regularity");
    check_cmd->add_option("cover", cover_path)->required();

    auto* carrier_cmd = app.add_subcommand("carrier", "carrier calculus");
    auto* validate_cmd = carrier_cmd->add_subcommand("validate");
    validate_cmd->add_option("carrier", carrier_path)->required();
    auto* compose_cmd = carrier_cmd->add_subcommand("compose");
    compose_cmd->add_option("first", carrier_path)->required();
    compose_cmd->add_option("second", carrier_path2)->required();
    auto* invert_cmd = carrier_cmd->add_subcommand("invert");
    invert_cmd->add_option("carrier", carrier_path)->required();
    carrier_cmd->require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "nerve-theorem pipeline");
    verify_cmd->add_option("cover", cover_path)->required();
    auto* verify_n_opt = verify_cmd->add_option("--n", n, "degree-bounded variant");

    auto* homology_cmd = app.add_subcommand("homology", "integer homology profile");
    homology_cmd->add_flag("--reduced", reduced);
    homology_cmd->add_option("complex", complex_path)->required();

    auto* map_cmd = app.add_subcommand("map", "canonical maps and carried checks");
    auto* canonical_cmd = map_cmd->add_subcommand("canonical");
    canonical_cmd->add_option("cover", cover_path)->required();
    auto* carried_cmd = map_cmd->add_subcommand("check-carried");
    carried_cmd->add_option("map", map_path)->required();
    carried_cmd->add_option("carrier", carrier_path)->required();
    map_cmd->require_subcommand(1);

    auto* gen_cmd = app.add_subcommand("gen", "emit a named instance");
    gen_cmd->add_option("id", instance_id)->required();

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism of two complexes");
    iso_cmd->add_option("first", complex_path)->required();
    iso_cmd->add_option("second", complex_path2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        emit(Json{{"error", {{"kind", "malformed-input"}, {"message", e.what()}}}});
        return kExitMalformed;
    }
    g_pretty = format == "pretty";

    if (*nerve_cmd) {
        emit(nerve_to_json(nerve(load_cover(cover_path))));
        return kExitHolds;
    }
    if (*stars_cmd) {
        const auto K = load_complex(complex_path);
        emit(cover_to_json(star_type == "open" ? open_star_cover(K)
                                               : barycentric_star_cover(K)));
        return kExitHolds;
    }
    if (*check_cmd) {
        const auto cover = load_cover(cover_path);
        RegularityReport report;
        if (mode == "regular") {
            report = check_regularity(cover, RegularityMode::Regular);
        } else if (mode == "weak") {
            report = check_regularity(cover, RegularityMode::WeaklyRegular);
        } else {
            report = check_regularity(cover, RegularityMode::NRegular, n);
        }
        emit(regularity_to_json(report));
        return verdict_exit(report.overall);
    }
    if (*validate_cmd) {
        const auto verdict = validate_carrier(load_carrier(carrier_path));
        Json j{{"valid", verdict.valid}};
        if (!verdict.valid) j["violating"] = verdict.violating;
        emit(j);
        return verdict.valid ? kExitHolds : kExitFails;
    }
    if (*compose_cmd) {
        emit(carrier_to_json(compose(load_carrier(carrier_path),
                                     load_carrier(carrier_path2))));
        return kExitHolds;
    }
    if (*invert_cmd) {
        const auto inv = invert(load_carrier(carrier_path));
        if (!inv) {
            emit(Json{{"invertible", false}});
            return kExitFails;
        }
        Json j = carrier_to_json(*inv);
        j["invertible"] = true;
        emit(j);
        return kExitHolds;
    }
    if (*verify_cmd) {
        const auto cover = load_cover(cover_path);
        const bool bounded = verify_n_opt->count() > 0;
        const auto report = bounded ? verify_n_nerve_theorem(cover, n, cover_path)
                                    : verify_nerve_theorem(cover, cover_path);
        emit(equivalence_to_json(report));
        return verdict_exit(report.overall);
    }
    if (*homology_cmd) {
        emit(homology_to_json(homology(load_complex(complex_path), reduced)));
        return kExitHolds;
    }
    if (*canonical_cmd) {
        emit(map_to_json(canonical_nerve_map(load_cover(cover_path))));
        return kExitHolds;
    }
    if (*carried_cmd) {
        const auto f = map_from_json(load_json(map_path));
        auto C = load_carrier(carrier_path);
        if (!(f.source == C.domain.base()) &&
            f.source == barycentric_subdivision(C.domain.base())) {
            C = subdivide_domain(C);  // maps given over the subdivided base
        }
        const auto verdict = is_carried(f, C);
        Json j{{"carried", verdict.holds}};
        if (!verdict.holds) j["witness"] = verdict.witness;
        emit(j);
        return verdict.holds ? kExitHolds : kExitFails;
    }
    if (*gen_cmd) {
        if (gallery::is_complex_id(instance_id)) {
            emit(complex_to_json(gallery::make_complex(instance_id)));
        } else {
            emit(cover_to_json(gallery::make_cover(instance_id)));
        }
        return kExitHolds;
    }
    if (*iso_cmd) {
        const auto witness =
            complexes_isomorphic(load_complex(complex_path), load_complex(complex_path2));
        Json j{{"isomorphic", witness.has_value()}};
        if (witness) {
            Json b = Json::object();
            for (const auto& [v, w] : *witness) b[v] = w;
            j["bijection"] = std::move(b);
        }
        emit(j);
        return witness ? kExitHolds : kExitFails;
    }
    return kExitMalformed;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const MalformedInput& e) {
        std::cerr << e.what() << "\n";
        emit(Json{{"error", {{"kind", "malformed-input"}, {"message", e.what()}}}});
        return kExitMalformed;
    } catch (const ResourceLimit& e) {
        std::cerr << e.what() << "\n";
        emit(Json{{"error", {{"kind", "resource-limit"}, {"message", e.what()}}}});
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        emit(Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
        return kExitMalformed;
    }
}
