#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "conley/conley_index.hpp"
#include "conley/degree.hpp"
#include "conley/dold.hpp"
#include "conley/error.hpp"
#include "conley/finite_map.hpp"
#include "conley/json_io.hpp"
#include "conley/linalg.hpp"
#include "conley/radial.hpp"
#include "conley/realize.hpp"

namespace conley::cli {

using json_io::Json;

struct CommandResult {
    bool ok = true;
    Json payload;
    std::vector<std::string> diagnostics;
    std::optional<ErrorCode> error;
    std::string message;
};

/// What a process should do with a result: the text for stdout and the exit
/// status.
struct Outcome {
    CommandResult result;
    int exit_code = 0;
    std::string text;
};

/// 0 on success, 2 for malformed input or usage, 1 for every other failure.
inline int exit_code_for(const CommandResult& r) {
    if (r.ok) return 0;
    return r.error == ErrorCode::format ? 2 : 1;
}

inline Json to_json(const CommandResult& r) {
    if (r.ok) return r.payload;
    return {{"status", "error"},
            {"error", {{"code", std::string(to_string(*r.error))}, {"message", r.message}}},
            {"diagnostics", r.diagnostics}};
}

namespace detail {

/// Option value as JSON: inline when it starts with '{' or '[', "-" for
/// standard input, otherwise a file path.
inline Json load(const std::string& arg, std::istream& in) {
    const auto first = std::find_if_not(arg.begin(), arg.end(), [](unsigned char c) { return std::isspace(c); });
    if (first != arg.end() && (*first == '{' || *first == '[')) return json_io::parse(arg);
    if (arg == "-") return json_io::parse(std::string(std::istreambuf_iterator<char>(in), {}));
    std::ifstream file(arg);
    if (!file) fail(ErrorCode::format, "cannot read input file '" + arg + "'");
    return json_io::parse(std::string(std::istreambuf_iterator<char>(file), {}));
}

inline CommandResult error_result(ErrorCode code, std::string message, std::vector<std::string> diagnostics = {}) {
    CommandResult r;
    r.ok = false;
    r.error = code;
    r.message = std::move(message);
    r.diagnostics = std::move(diagnostics);
    return r;
}

} // namespace detail

/// Parses `args` (without the program name), runs the selected subcommand
/// and renders its result. Never throws for bad input.
inline Outcome run(const std::vector<std::string>& args, std::istream& in = std::cin) {
    CLI::App app{"Exact discrete Conley index calculus", "conley"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("--output", output_path, "write the JSON result to this file instead of stdout");

    std::function<Json()> action;
    auto load = [&in](const std::string& arg) { return detail::load(arg, in); };

    // Shared option storage; each invocation selects exactly one leaf.
    std::string seq, coeffs, matrix, a_arg, b_arg, phi, psi, data, finv, model, loop, sphere, kind, radius;
    std::size_t n_max = 24, dim = 0, l = 0, resolution = 0, m = 0;
    long orientation = -1;

    auto leaf = [](CLI::App* group, const char* name, const char* help) {
        CLI::App* sub = group->add_subcommand(name, help);
        return sub;
    };

    // dold
    CLI::App* dold = app.add_subcommand("dold", "Dold sequences and coefficients");
    dold->require_subcommand(1);
    {
        CLI::App* s = leaf(dold, "decompose", "coefficients a_k of a periodic sequence");
        s->add_option("--seq", seq, "sequence {\"prefix\",\"period\"}")->required();
        s->callback([&] {
            action = [&] { return Json{{"coeffs", json_io::to_json(dold_decompose(json_io::sequence_from_json(load(seq))))}}; };
        });
        s = leaf(dold, "check", "test the Dold congruences");
        s->add_option("--seq", seq, "sequence {\"prefix\",\"period\"}")->required();
        s->callback([&] {
            action = [&] {
                DoldCheck c = dold_check(json_io::sequence_from_json(load(seq)));
                Json out{{"ok", c.ok}};
                if (c.first_violation)
                    out["first_violation"] = {{"k", c.first_violation->first}, {"a", to_string(c.first_violation->second)}};
                return out;
            };
        });
        s = leaf(dold, "reconstruct", "sequence from coefficients");
        s->add_option("--coeffs", coeffs, "coefficients {\"k\": \"a_k\"}")->required();
        s->add_option("--n-max", n_max, "minimum prefix length")->capture_default_str();
        s->callback([&] {
            action = [&] { return Json{{"sequence", json_io::to_json(reconstruct(json_io::coeffs_from_json(load(coeffs)), n_max))}}; };
        });
    }

    // linalg
    CLI::App* linalg = app.add_subcommand("linalg", "exact linear algebra");
    linalg->require_subcommand(1);
    {
        CLI::App* s = leaf(linalg, "leray", "Leray reduction of a square matrix");
        s->add_option("--matrix", matrix, "matrix")->required();
        s->callback([&] { action = [&] { return Json{{"matrix", json_io::to_json(leray_reduction(json_io::matrix_from_json(load(matrix))))}}; }; });

        auto pair_cmd = [&](const char* name, const char* help, const char* key, bool (*test)(const RationalMatrix&, const RationalMatrix&)) {
            CLI::App* p = leaf(linalg, name, help);
            p->add_option("--a", a_arg, "first matrix")->required();
            p->add_option("--b", b_arg, "second matrix")->required();
            p->callback([&, key, test] {
                action = [&, key, test] {
                    return Json{{key, test(json_io::matrix_from_json(load(a_arg)), json_io::matrix_from_json(load(b_arg)))}};
                };
            });
        };
        pair_cmd("conjugate", "similarity over Q", "conjugate", &conjugate);
        pair_cmd("shift-equiv", "shift equivalence over Q", "shift_equivalent", &shift_equivalent_matrices);
        pair_cmd("spectrum-equiv", "equal nonzero spectrum with multiplicity", "spectrum_equivalent", &spectrum_equivalent);
    }

    // maps
    CLI::App* maps = app.add_subcommand("maps", "self-maps of finite sets");
    maps->require_subcommand(1);
    {
        CLI::App* s = leaf(maps, "shift-equiv", "shift equivalence of two finite maps");
        s->add_option("--phi", phi, "first map")->required();
        s->add_option("--psi", psi, "second map")->required();
        s->callback([&] {
            action = [&] {
                const FiniteMap f = json_io::map_from_json(load(phi)), g = json_io::map_from_json(load(psi));
                return Json{{"shift_equivalent", shift_equivalent_maps(f, g)},
                            {"cycles_phi", json_io::to_json(periodic_orbit_counts(f))},
                            {"cycles_psi", json_io::to_json(periodic_orbit_counts(g))}};
            };
        });
        s = leaf(maps, "fix-seq", "number of fixed points of the iterates");
        s->add_option("--phi", phi, "map")->required();
        s->add_option("--n-max", n_max, "number of iterates")->capture_default_str();
        s->callback([&] { action = [&] { return Json{{"fix", fix_sequence(json_io::map_from_json(load(phi)), n_max)}}; }; });
    }

    // conley
    CLI::App* conley_cmd = app.add_subcommand("conley", "homological Conley index data");
    conley_cmd->require_subcommand(1);
    {
        CLI::App* s = leaf(conley_cmd, "index-seq", "fixed point index sequence");
        s->add_option("--data", data, "index data")->required();
        s->add_option("--n-max", n_max, "minimum prefix length")->capture_default_str();
        s->callback([&] { action = [&] { return Json{{"sequence", json_io::to_json(index_sequence(json_io::conley_from_json(load(data)), n_max))}}; }; });
        s = leaf(conley_cmd, "dual", "index data of the inverse map");
        s->add_option("--data", data, "index data")->required();
        s->callback([&] { action = [&] { return Json{{"data", json_io::to_json(szymczak_dual(json_io::conley_from_json(load(data))))}}; }; });
        s = leaf(conley_cmd, "check-duality", "compare index data of f and f^-1");
        s->add_option("--f", data, "index data of f")->required();
        s->add_option("--finv", finv, "index data of f^-1")->required();
        s->callback([&] {
            action = [&] { return Json{{"dual", check_duality(json_io::conley_from_json(load(data)), json_io::conley_from_json(load(finv)))}}; };
        });
        for (const char* name : {"attractor", "repeller"}) {
            s = leaf(conley_cmd, name, name[0] == 'a' ? "index data of an attracting fixed point" : "index data of a repelling fixed point");
            s->add_option("--dim", dim, "ambient dimension")->required();
            s->add_option("--orientation", orientation, "orientation sign, 1 or -1")->capture_default_str();
            const bool attractor = name[0] == 'a';
            s->callback([&, attractor] {
                action = [&, attractor] {
                    const Orientation o = orientation_from_sign(orientation);
                    return Json{{"data", json_io::to_json(attractor ? canonical_attractor(dim, o) : canonical_repeller(dim, o))}};
                };
            });
        }
    }

    // realize
    CLI::App* realize_cmd = app.add_subcommand("realize", "index sequences of orientation-reversing maps of R^3");
    realize_cmd->require_subcommand(1);
    {
        CLI::App* s = leaf(realize_cmd, "check", "test the realizability conditions");
        s->add_option("--coeffs", coeffs, "coefficients {\"k\": \"a_k\"}")->required();
        s->callback([&] {
            action = [&] {
                ConditionCheck c = check_conditions(json_io::coeffs_from_json(load(coeffs)));
                Json out{{"ok", c.ok}};
                if (!c.ok) out["reason"] = c.reason;
                return out;
            };
        });
        s = leaf(realize_cmd, "solve", "periodic orbit counts of a witness");
        s->add_option("--coeffs", coeffs, "coefficients {\"k\": \"a_k\"}")->required();
        s->callback([&] {
            action = [&] {
                CycleCountPair p = solve_witness(json_io::coeffs_from_json(load(coeffs)));
                return Json{{"b", json_io::to_json(p.b)}, {"c", json_io::to_json(p.c)}};
            };
        });
        s = leaf(realize_cmd, "witness", "full verified witness");
        s->add_option("--coeffs", coeffs, "coefficients {\"k\": \"a_k\"}")->required();
        s->callback([&] { action = [&] { return json_io::to_json(realize(json_io::coeffs_from_json(load(coeffs)))); }; });
    }

    // radial
    CLI::App* radial = app.add_subcommand("radial", "radial skew-product models");
    radial->require_subcommand(1);
    {
        auto describe = [&](const RadialModel& rm) {
            ConleyIndexData d = induced_conley_data(rm);
            IndexSequence s = index_sequence(d, n_max);
            return Json{{"model", json_io::to_json(rm)}, {"data", json_io::to_json(d)}, {"sequence", json_io::to_json(s)}};
        };
        CLI::App* s = leaf(radial, "induce", "index data and sequence of a model");
        s->add_option("--model", model, "radial model")->required();
        s->add_option("--n-max", n_max, "minimum prefix length")->capture_default_str();
        s->callback([&, describe] { action = [&, describe] { return describe(json_io::radial_from_json(load(model))); }; });
        s = leaf(radial, "from-perms", "model on S^2 from component permutations");
        s->add_option("--attractor", phi, "action on components of the attractor")->required();
        s->add_option("--repeller", psi, "action of the inverse on components of the repeller")->required();
        s->add_option("--orientation", orientation, "orientation sign, 1 or -1")->capture_default_str();
        s->add_option("--n-max", n_max, "minimum prefix length")->capture_default_str();
        s->callback([&, describe] {
            action = [&, describe] {
                return describe(model_from_attractor_repeller_perms(json_io::map_from_json(load(phi)), json_io::map_from_json(load(psi)),
                                                                    orientation_from_sign(orientation)));
            };
        });
        s = leaf(radial, "solenoidal", "solenoidal model on S^3");
        s->add_option("--m", m, "degree of the solenoidal map")->required();
        s->add_option("--n-max", n_max, "minimum prefix length")->capture_default_str();
        s->callback([&, describe] { action = [&, describe] { return describe(solenoidal_model(m)); }; });
    }

    // degree
    CLI::App* degree = app.add_subcommand("degree", "fixed point index as a Brouwer degree");
    degree->require_subcommand(1);
    {
        CLI::App* s = leaf(degree, "winding", "winding number of sampled id - f on a circle");
        s->add_option("--loop", loop, "sampled loop")->required();
        s->callback([&] { action = [&] { return Json{{"index", winding_number(json_io::loop_from_json(load(loop)))}}; }; });
        s = leaf(degree, "sphere", "degree of sampled id - g on a triangulated sphere");
        s->add_option("--sphere", sphere, "sampled sphere map")->required();
        s->callback([&] { action = [&] { return Json{{"index", sphere_degree(json_io::sphere_from_json(load(sphere)))}}; }; });
        s = leaf(degree, "example", "sample and evaluate one of the polynomial examples");
        s->add_option("--kind", kind, "planar_poly or volume_preserving_3d")->required()->check(CLI::IsMember({"planar_poly", "volume_preserving_3d"}));
        s->add_option("--l", l, "exponent l >= 1")->required();
        s->add_option("--radius", radius, "radius as p/q")->required();
        s->add_option("--resolution", resolution, "loop samples, or minimum number of triangles")->required();
        s->callback([&] {
            action = [&] {
                const Rational rho = parse_rational(radius);
                if (kind == "planar_poly") {
                    ExampleSample e = sample_example_map(ExampleKind::planar_poly, l, rho, resolution);
                    return Json{{"index", winding_number(std::get<SampledLoop>(e.sample))}};
                }
                ExampleSample e = sample_example_map(ExampleKind::volume_preserving_3d, l, rho, resolution);
                return Json{{"index", sphere_degree(std::get<SampledSphereMap>(e.sample))},
                            {"triangles", e.resolution},
                            {"fiber_tolerance", to_string(*e.fiber_tolerance)}};
            };
        });
    }

    Outcome out;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        out.result.payload = action();
    } catch (const CLI::CallForHelp&) {
        out.text = app.help();
        return out;
    } catch (const CLI::ParseError& e) {
        out.result = detail::error_result(ErrorCode::format, e.what(), {app.help()});
    } catch (const Error& e) {
        out.result = detail::error_result(e.code(), e.what());
    } catch (const Json::exception& e) {
        out.result = detail::error_result(ErrorCode::format, std::string("malformed JSON input: ") + e.what());
    }

    out.exit_code = exit_code_for(out.result);
    const std::string rendered = to_json(out.result).dump() + "\n";
    if (out.result.ok && !output_path.empty()) {
        std::ofstream file(output_path);
        if (!file) {
            out.result = detail::error_result(ErrorCode::format, "cannot write output file '" + output_path + "'");
            out.exit_code = exit_code_for(out.result);
            out.text = to_json(out.result).dump() + "\n";
            return out;
        }
        file << rendered;
        return out;
    }
    out.text = rendered;
    return out;
}

} // namespace conley::cli
