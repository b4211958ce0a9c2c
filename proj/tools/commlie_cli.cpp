#include "commlie/classical.hpp"
#include "commlie/grading.hpp"
#include "commlie/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

using namespace commlie;
using nlohmann::ordered_json;

namespace {

struct ResolvedAlgebra {
    std::string name;
    std::shared_ptr<MatrixLieAlgebra> matrix; // null for Chevalley realizations
    AlgebraRef structure;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

ResolvedAlgebra resolve_algebra(const std::string& raw) {
    std::string name = lower(raw);
    ResolvedAlgebra out;
    out.name = name;
    if (name.rfind("sl", 0) == 0 || name.rfind("sp", 0) == 0 || name.rfind("so", 0) == 0) {
        out.matrix = std::make_shared<MatrixLieAlgebra>(build_classical(name));
        out.structure = out.matrix->structure();
    } else {
        out.structure = build_chevalley(SimpleType::parse(name));
    }
    return out;
}

std::vector<LieElement> resolve_point(const ResolvedAlgebra& alg, const std::string& label) {
    if (label == "sl4-guralnick" || label == "sp4-triple" || label == "so4s-x1") {
        if (!alg.matrix) throw std::invalid_argument(label + " needs a matrix algebra");
        if (label == "sl4-guralnick") return guralnick_quadruple(*alg.matrix).tuple;
        if (label == "sp4-triple") return sp4_triple(*alg.matrix).tuple;
        return so4s_x1(*alg.matrix).tuple;
    }
    if (label == "g2-triple") return g2_triple(alg.structure).tuple;
    if (label == "e7-orbit-0200000") return e7_orbit_rep(alg.structure).tuple;
    if (label == "e7-h") return {e7_grading_h(alg.structure)};
    throw std::invalid_argument("unknown point label: " + label);
}

std::vector<LieElement> load_element_file(const ResolvedAlgebra& alg, const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open element file: " + path);
    ordered_json j = ordered_json::parse(in);
    auto to_element = [&](const ordered_json& arr) {
        RationalVector c;
        for (const auto& v : arr) c.emplace_back(v.get<std::string>());
        return LieElement(alg.structure, std::move(c));
    };
    std::vector<LieElement> out;
    if (!j.is_array() || j.empty()) throw std::invalid_argument("element file: expected an array");
    if (j.front().is_array())
        for (const auto& arr : j) out.push_back(to_element(arr));
    else
        out.push_back(to_element(j));
    return out;
}

std::vector<int> parse_m_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw std::invalid_argument("empty m list");
    return out;
}

ordered_json rational_pair(const Rational& r) {
    return ordered_json::array({numerator(r).str(), denominator(r).str()});
}

ordered_json matrix_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_pair(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_subspace_basis(const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
            if (j) std::cout << " ";
            std::cout << to_string(s.basis()(i, j));
        }
        std::cout << "]\n";
    }
}

int run_verify(const std::string& section, const std::string& m_spec, const std::string& format,
               long max_norm) {
    VerifyOptions opt;
    opt.section = section;
    if (!m_spec.empty()) opt.m_values = parse_m_list(m_spec);
    opt.max_norm = max_norm;
    auto records = verify_paper(opt);
    std::cout << render_records(records, parse_format(format));
    for (const auto& r : records)
        if (!r.pass) return 1;
    return 0;
}

int run_tspace(const std::string& algebra, const std::string& point_label, int m,
               const std::string& format, const std::string& element_file, bool show_basis) {
    auto alg = resolve_algebra(algebra);
    auto point = element_file.empty() ? resolve_point(alg, point_label)
                                      : load_element_file(alg, element_file);
    if (m < static_cast<int>(point.size()))
        throw std::invalid_argument("--m must be at least the tuple length");
    std::vector<LieElement> padded = point;
    while (static_cast<int>(padded.size()) < m) padded.push_back(LieElement::zero(alg.structure));
    TSpaceReport rep = tspace(padded);
    if (parse_format(format) == Format::Json) {
        ordered_json o;
        o["algebra"] = alg.name;
        o["point"] = point_label.empty() ? "element-file" : point_label;
        o["m"] = m;
        o["dim"] = rep.dim;
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "tspace dim (m=" << m << "): " << rep.dim << "\n";
        if (show_basis) print_subspace_basis(rep.basis);
    }
    return 0;
}

int run_centralizer(const std::string& algebra, const std::string& x_label,
                    const std::string& format, const std::string& element_file, bool show_basis) {
    auto alg = resolve_algebra(algebra);
    auto xs = element_file.empty() ? resolve_point(alg, x_label)
                                   : load_element_file(alg, element_file);
    Subspace c = joint_centralizer(alg.structure, xs);
    if (parse_format(format) == Format::Json) {
        ordered_json o;
        o["algebra"] = alg.name;
        o["x"] = x_label.empty() ? "element-file" : x_label;
        o["dim"] = c.dim();
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "centralizer dim: " << c.dim() << "\n";
        if (show_basis) print_subspace_basis(c);
    }
    return 0;
}

int run_grading(const std::string& algebra, const std::string& x_label, const std::string& h_label,
                const std::string& format, const std::string& element_file) {
    auto alg = resolve_algebra(algebra);
    LieElement h = resolve_point(alg, h_label).front();
    std::optional<LieElement> x;
    if (!x_label.empty()) x = resolve_point(alg, x_label).front();
    if (!element_file.empty()) x = load_element_file(alg, element_file).front();

    GradingReport g = grade_by(h);
    std::map<int, std::size_t> cdims;
    if (x) cdims = graded_centralizer_dims(*x, h);

    if (parse_format(format) == Format::Json) {
        ordered_json o;
        o["algebra"] = alg.name;
        o["h"] = h_label;
        o["top_degree"] = g.top_degree;
        ordered_json pieces = ordered_json::array();
        for (const auto& [deg, piece] : g.pieces) {
            ordered_json p;
            p["degree"] = deg;
            p["dim"] = piece.dim();
            if (x) p["centralizer_dim"] = cdims.at(deg);
            pieces.push_back(std::move(p));
        }
        o["pieces"] = std::move(pieces);
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << "top degree d = " << g.top_degree << "\n";
        for (const auto& [deg, piece] : g.pieces) {
            std::cout << "L_" << deg << ": dim " << piece.dim();
            if (x) std::cout << ", dim(L_" << deg << " /\\ C(x)) = " << cdims.at(deg);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_adding_diagonals(const std::string& ambient, const std::string& sub, int m,
                         long long dim_cprime, const std::string& format) {
    SimpleType big = SimpleType::parse(ambient);
    SimpleType small = SimpleType::parse(sub);
    long long value = adding_diagonals_dim(dim_cprime, big.algebra_dim(), small.algebra_dim(), m,
                                           big.rank, small.rank);
    if (parse_format(format) == Format::Json) {
        ordered_json o;
        o["ambient"] = big.name();
        o["sub"] = small.name();
        o["m"] = m;
        o["dim_cprime"] = dim_cprime;
        o["dim"] = value;
        std::cout << o.dump(2) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int run_dump(const std::string& roots, const std::string& constants, const std::string& point,
             int point_s) {
    if (!roots.empty()) {
        RootSystem rs(SimpleType::parse(roots));
        ordered_json o;
        o["type"] = rs.type().name();
        o["rank"] = rs.rank();
        ordered_json cartan = ordered_json::array();
        for (const auto& row : rs.cartan()) cartan.push_back(row);
        o["cartan"] = std::move(cartan);
        ordered_json rj = ordered_json::array();
        for (const auto& r : rs.roots()) rj.push_back(r);
        o["roots"] = std::move(rj);
        std::cout << o.dump(2) << "\n";
        return 0;
    }
    if (!constants.empty()) {
        auto alg = resolve_algebra(constants);
        const auto& ls = *alg.structure;
        if (!ls.note().empty()) std::cerr << ls.note() << "\n";
        std::cout << "i,j,k,gamma\n";
        for (std::size_t i = 0; i < ls.dim(); ++i)
            for (std::size_t j = 0; j < ls.dim(); ++j)
                for (const auto& [k, c] : ls.pair_bracket(i, j))
                    std::cout << i << "," << j << "," << k << "," << to_string(c) << "\n";
        return 0;
    }
    if (!point.empty()) {
        ExamplePoint p = paper_point(point, point_s);
        ordered_json arr = ordered_json::array();
        const auto& alg = p.tuple.front().algebra();
        if (!alg->is_chevalley()) {
            // rebuild the realization to print dense matrices
            std::string tag = alg->note().substr(std::string("matrix:").size());
            auto matrix = build_classical(tag);
            for (const auto& el : p.tuple) arr.push_back(matrix_json(matrix.realize(el.coeffs())));
        } else {
            for (const auto& el : p.tuple) {
                ordered_json coeffs = ordered_json::array();
                for (const auto& c : el.coeffs()) coeffs.push_back(rational_pair(c));
                arr.push_back(std::move(coeffs));
            }
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    throw std::invalid_argument("dump: pass --dump-roots, --dump-constants or --dump-point");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for commuting varieties of simple Lie algebras"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string section, m_spec, algebra, point_label, x_label, h_label, element_file;
    std::string dump_roots, dump_constants, dump_point;
    std::string ambient, sub;
    int m = 3, point_s = 0;
    long long dim_cprime = 0;
    long max_norm = 0;
    bool show_basis = false;

    auto* verify = app.add_subcommand("verify-paper", "run the reproduction suite");
    verify->add_option("--section", section, "restrict to one section (app2, 4.1..4.5, lemmas)");
    verify->add_option("--m", m_spec, "comma-separated tuple lengths, e.g. 3,4,5");
    verify->add_option("--format", format, "text, json or csv");
    verify->add_option("--max-norm", max_norm, "search bound override for the regular h");

    auto* ts = app.add_subcommand("tspace", "tangent-direction space dimension at a point");
    ts->add_option("--algebra", algebra)->required();
    ts->add_option("--point", point_label, "point label");
    ts->add_option("--m", m, "tuple length (zero-padded)")->required();
    ts->add_option("--format", format);
    ts->add_option("--element-file", element_file, "JSON coefficient vectors over the basis");
    ts->add_flag("--basis", show_basis, "print a basis");

    auto* cz = app.add_subcommand("centralizer", "centralizer dimension of a labelled element");
    cz->add_option("--algebra", algebra)->required();
    cz->add_option("--x", x_label, "element or tuple label");
    cz->add_option("--format", format);
    cz->add_option("--element-file", element_file);
    cz->add_flag("--basis", show_basis);

    auto* gr = app.add_subcommand("grading", "integer grading by a Cartan element");
    gr->set_help_flag("--help", "print help");
    gr->add_option("--algebra", algebra)->required();
    gr->add_option("--x", x_label, "element whose centralizer is graded");
    gr->add_option("--h", h_label, "grading element label")->required();
    gr->add_option("--format", format);
    gr->add_option("--element-file", element_file);

    auto* ad = app.add_subcommand("adding-diagonals", "dimension transfer to a larger diagram");
    ad->add_option("--ambient", ambient)->required();
    ad->add_option("--sub", sub)->required();
    ad->add_option("--m", m)->required();
    ad->add_option("--dim-cprime", dim_cprime)->required();
    ad->add_option("--format", format);

    auto* dp = app.add_subcommand("dump", "emit roots, constants or points");
    dp->add_option("--dump-roots", dump_roots, "root system as JSON");
    dp->add_option("--dump-constants", dump_constants, "structure table as CSV");
    dp->add_option("--dump-point", dump_point, "labelled point as JSON");
    dp->add_option("--s", point_s, "block size for so4s labels");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(section, m_spec, format, max_norm);
        if (ts->parsed())
            return run_tspace(algebra, point_label, m, format, element_file, show_basis);
        if (cz->parsed())
            return run_centralizer(algebra, x_label, format, element_file, show_basis);
        if (gr->parsed()) return run_grading(algebra, x_label, h_label, format, element_file);
        if (ad->parsed()) return run_adding_diagonals(ambient, sub, m, dim_cprime, format);
        if (dp->parsed()) return run_dump(dump_roots, dump_constants, dump_point, point_s);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
