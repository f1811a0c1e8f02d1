// tropline: command-line front end.
//
// Exit codes: 0 success, 1 a predicate subcommand answered "no", 2 error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tropline/builder.hpp"
#include "tropline/error.hpp"
#include "tropline/exits.hpp"
#include "tropline/io.hpp"
#include "tropline/lines.hpp"
#include "tropline/quadric.hpp"
#include "tropline/subdivision.hpp"
#include "tropline/surface.hpp"

using namespace tropline;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

TropicalPolynomial load_poly(const std::string& arg) { return parse_polynomial(read_text_argument(arg)); }

TropicalLine load_line(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("bad line JSON: ") + e.what(), e.byte);
    }
    return line_from_json(j);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lines on smooth tropical surfaces: subdivisions, surfaces, lines, exits"};
    app.require_subcommand(1);

    std::string poly, line_path, out_path, export_fmt = "json", clip, point, p_arg, q_arg, witness_path;
    int degree = 0;
    std::uint32_t seed = 0;
    std::int64_t max_delta = 0;

    auto* subdiv = app.add_subcommand("subdiv", "Regular subdivision induced by the coefficients (Triangulation JSON)");
    subdiv->add_option("poly", poly, "Polynomial file or literal text")->required();
    subdiv->add_option("-o,--out", out_path, "Output path");

    auto* smooth = app.add_subcommand("smooth", "Is the induced subdivision elementary (predicate)");
    smooth->add_option("poly", poly, "Polynomial file or literal text")->required();

    auto* surface = app.add_subcommand("surface", "Surface complex as JSON or OFF");
    surface->add_option("poly", poly, "Polynomial file or literal text")->required();
    surface->add_option("--export", export_fmt, "json or off")->check(CLI::IsMember({"json", "off"}));
    surface->add_option("--clip", clip, "Bounding box x0,y0,z0,x1,y1,z1");
    surface->add_option("-o,--out", out_path, "Output path");

    auto* line_check = app.add_subcommand("line-check", "Is the line contained in the surface (predicate)");
    line_check->add_option("poly", poly, "Polynomial file or literal text")->required();
    line_check->add_option("line", line_path, "Line JSON")->required()->check(CLI::ExistingFile);

    auto* line_classify = app.add_subcommand("line-classify", "Isolated line or a verified one-parameter family");
    line_classify->add_option("poly", poly, "Polynomial file or literal text")->required();
    line_classify->add_option("line", line_path, "Line JSON")->required()->check(CLI::ExistingFile);

    auto* quadric = app.add_subcommand("quadric-lines", "The two lines through a point of the compact 2-cell");
    quadric->add_option("poly", poly, "Polynomial file or literal text")->required();
    quadric->add_option("--point", point, "x,y,z")->required();

    auto* build = app.add_subcommand("build", "Constructions");
    build->require_subcommand(1);
    auto* family = build->add_subcommand("family", "Smooth surface of degree d carrying a family of lines");
    family->add_option("--degree", degree, "Degree")->required()->check(CLI::Range(1, 64));
    family->add_option("--seed", seed, "Seed (default 0)");
    family->add_option("-o,--out", out_path, "Output path");

    auto* exits = app.add_subcommand("exits", "Exit searches");
    exits->require_subcommand(1);
    auto* search = exits->add_subcommand("search", "Even degrees without a solution of f = 1");
    search->add_option("--max", max_delta, "Largest degree")->required()->check(CLI::Range(1, 100000));
    search->add_option("--emit-witnesses", witness_path, "Write witnesses as JSON");
    auto* odd = exits->add_subcommand("odd", "Check the odd-degree witnesses (predicate)");
    odd->add_option("--max", max_delta, "Largest degree")->required()->check(CLI::Range(1, 100000));

    auto* enumerate = app.add_subcommand("enumerate", "Enumerations");
    enumerate->require_subcommand(1);
    auto* gamma2 = enumerate->add_subcommand("gamma2", "Elementary triangulations of the degree-2 simplex");
    gamma2->add_option("-o,--out", out_path, "Write the triangulations as JSON");

    auto* through = app.add_subcommand("lines-through", "Tropical lines in R^3 through two points");
    through->add_option("--p", p_arg, "x,y,z")->required();
    through->add_option("--q", q_arg, "x,y,z")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*subdiv) {
            auto f = load_poly(poly);
            emit(dump(triangulation_json(induce(f), f.degree())), out_path);
            return kOk;
        }
        if (*smooth) {
            auto r = smoothness_check(load_poly(poly));
            if (r.smooth) {
                std::cout << "smooth, " << r.cell_count << " cells\n";
                return kOk;
            }
            std::cout << "not smooth, " << r.cell_count << " cells, normalized volumes "
                      << to_string(r.min_volume * 6) << ".." << to_string(r.max_volume * 6) << "\n";
            return kFalse;
        }
        if (*surface) {
            auto x = build_complex(load_poly(poly));
            std::optional<ClipBox> box;
            if (!clip.empty()) box = parse_clip_box(clip);
            emit(export_fmt == "off" ? off_export(x, box) : dump(surface_json(x)), out_path);
            return kOk;
        }
        if (*line_check) {
            auto f = load_poly(poly);
            auto l = load_line(line_path);
            bool on = contains_line(f, l);
            std::cout << (on ? "contained" : "not contained") << "\n";
            return on ? kOk : kFalse;
        }
        if (*line_classify) {
            auto x = build_complex(load_poly(poly));
            auto l = load_line(line_path);
            Json out{{"line", to_json(l)}, {"data", to_json(line_data(x, l))}};
            auto c = classify_line(x, l);
            if (std::holds_alternative<Isolated>(c)) {
                out["classification"] = "isolated";
            } else {
                out["classification"] = "family";
                out["witness"] = to_json(std::get<FamilyWitness>(c));
            }
            std::cout << dump(out);
            return kOk;
        }
        if (*quadric) {
            auto x = build_complex(load_poly(poly));
            auto cell = compact_cell(x);
            auto [a, b] = two_lines_through(x, parse_point(point));
            Json out{{"cell", cell.name}, {"lines", Json::array({to_json(a), to_json(b)})}};
            std::cout << dump(out);
            return kOk;
        }
        if (*family) {
            auto t = build_family_triangulation(degree, seed);
            auto f = to_polynomial(t);
            Json out{{"degree", degree}, {"seed", seed}, {"polynomial", render(f)}};
            Json omega = Json::array();
            for (const auto& p : omega_tetrahedron(degree)) omega.push_back(Json::array({p[0], p[1], p[2]}));
            out["omega"] = omega;
            out["triangulation"] = triangulation_json(t, degree);
            emit(dump(out), out_path);
            return kOk;
        }
        if (*search) {
            auto r = search_even_exceptions(max_delta);
            std::cout << "even degrees <= " << max_delta << " without a solution:";
            for (auto d : r.exceptions) std::cout << " " << d;
            std::cout << "\n";
            if (!witness_path.empty()) {
                Json w = Json::array();
                for (const auto& [d, q] : r.witnesses) w.push_back(Json{{"delta", d}, {"abcd", q}});
                emit(dump(Json{{"max", max_delta}, {"exceptions", r.exceptions}, {"witnesses", w}}), witness_path);
            }
            return kOk;
        }
        if (*odd) {
            auto r = verify_odd_solutions(max_delta);
            std::cout << "degree 3: " << (r.delta3_has_no_solution ? "no solution" : "has a solution") << "\n";
            for (const auto& w : r.witnesses)
                std::cout << "degree " << w.delta << ": (" << w.abcd[0] << "," << w.abcd[1] << "," << w.abcd[2] << ","
                          << w.abcd[3] << ") " << w.ordering << (w.valid ? "" : " INVALID") << "\n";
            return r.delta3_has_no_solution && r.all_valid() ? kOk : kFalse;
        }
        if (*gamma2) {
            auto all = enumerate_elementary_gamma2();
            std::cout << all.size() << " elementary triangulations\n";
            if (!out_path.empty()) {
                Json arr = Json::array();
                for (const auto& t : all) {
                    Json tj = Json::array();
                    for (const auto& tet : t) {
                        Json cell = Json::array();
                        for (const auto& p : tet) cell.push_back(Json::array({p[0], p[1], p[2]}));
                        tj.push_back(cell);
                    }
                    arr.push_back(tj);
                }
                emit(dump(arr), out_path);
            }
            return kOk;
        }
        if (*through) {
            auto r = lines_through(parse_point(p_arg), parse_point(q_arg));
            if (auto* l = std::get_if<TropicalLine>(&r)) {
                std::cout << dump(to_json(*l));
            } else {
                std::cout << "infinitely many lines: " << std::get<InfiniteLines>(r).reason << "\n";
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
