// Batch front end: parse partitioned quaternion matrices from JSON documents,
// run the inversion / quasideterminant / perturbation commands, cross-check
// methods, and emit result documents.
//
// Exit codes: 0 success, 2 parse or shape error, 3 not invertible,
// 4 method mismatch or failed check, 5 invalid flags or limits.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qdet/qdet.hpp"

namespace {

using nlohmann::ordered_json;

constexpr double kMethodAgreementRelTol = 1e-8;

struct GlobalOptions {
    std::string output;
    double tolerance = 1e-9;
    int max_expansion = 14;
};

struct CommandFailure {
    int exit_code;
    std::string code;
    std::string message;
    std::vector<long> indices;
};

int exit_code_for(const qdet::Error& e) {
    const std::string& c = e.code();
    if (c == "not-invertible" || c == "zero-division") return 3;
    if (c == "invalid-split" || c == "cap-exceeded") return 5;
    return 2;  // parse, shape, triangularity, dimension, index, degenerate
}

void emit_error(const std::string& code, const std::string& message, const std::vector<long>& indices) {
    ordered_json err;
    err["error"]["code"] = code;
    err["error"]["message"] = message;
    err["error"]["indices"] = indices;
    std::cerr << err.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw qdet::ParseError("cannot open input file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out.good()) throw qdet::ParseError("cannot open output file \"" + path + "\"");
    out << text;
}

template <typename Q>
bool blocks_agree(const qdet::Mat<Q>& a, const qdet::Mat<Q>& b) {
    if constexpr (qdet::NumericPolicy<Q>::approximate)
        return qdet::relative_distance(a, b) <= kMethodAgreementRelTol;
    else
        return a == b;
}

template <typename Q>
std::optional<std::pair<int, int>> first_disagreement(const qdet::BlockInverse<Q>& a,
                                                      const qdet::BlockInverse<Q>& b) {
    for (int j = 1; j <= a.n(); ++j)
        for (int k = 1; k <= a.n(); ++k)
            if (!blocks_agree(a.block(j, k), b.block(j, k))) return std::make_pair(j, k);
    return std::nullopt;
}

template <typename Q>
qdet::TypedDocument<Q> inverse_to_document(const qdet::BlockInverse<Q>& inv) {
    qdet::TypedDocument<Q> doc(inv.partition(), inv.partition(), false);
    // blocks above and on the diagonal are computed values and always emitted;
    // blocks below are structural zeros and stay implicit
    for (int j = 1; j <= inv.n(); ++j)
        for (int k = j; k <= inv.n(); ++k) doc.blocks.emplace(std::make_pair(j, k), inv.block(j, k));
    return doc;
}

template <typename Q>
qdet::BlockTriangularMatrix<Q> to_triangular(const qdet::TypedDocument<Q>& doc) {
    if (doc.rows != doc.cols)
        throw qdet::ShapeError("this command needs a square block partition");
    return qdet::BlockTriangularMatrix<Q>::create(doc.to_grid());
}

template <typename Q>
qdet::BlockInverse<Q> run_method(const qdet::BlockTriangularMatrix<Q>& m, const std::string& method) {
    if (method == "explicit") return qdet::inverse_explicit(m);
    if (method == "recursive") return qdet::inverse_recursive(m);
    return qdet::inverse_iterative(m);
}

int cmd_invert(const qdet::Document& doc, const GlobalOptions& opts, const std::string& method, bool check) {
    return std::visit(
        [&](const auto& typed) -> int {
            auto m = to_triangular(typed);
            auto result = run_method(m, method);
            if (check) {
                auto rec = qdet::inverse_recursive(m);
                auto itr = qdet::inverse_iterative(m);
                auto exp = qdet::inverse_explicit(m);
                for (const auto* other : {&rec, &itr}) {
                    if (auto bad = first_disagreement(exp, *other)) {
                        emit_error("method-mismatch",
                                   "inversion methods disagree at block (" + std::to_string(bad->first) +
                                       ", " + std::to_string(bad->second) + ")",
                                   {bad->first, bad->second});
                        return 4;
                    }
                }
            }
            write_output(qdet::serialize_document(inverse_to_document(result)), opts.output);
            return 0;
        },
        doc);
}

int cmd_qdet(const qdet::Document& doc, const GlobalOptions& opts, const std::string& method,
             int split_index) {
    return std::visit(
        [&](const auto& typed) -> int {
            using Entry = std::decay_t<decltype(typed.to_grid().block(1, 1).at(0, 0))>;
            auto grid = typed.to_grid();
            auto h = qdet::HessenbergGrid<Entry>::create(grid);
            auto value = [&] {
                if (method == "expansion") return qdet::hessenberg_qdet_expansion(h, opts.max_expansion);
                if (method == "split") {
                    if (split_index < 1 || split_index > h.size())
                        throw qdet::InvalidSplit("--split-index " + std::to_string(split_index) +
                                                     " outside 1.." + std::to_string(h.size()),
                                                 {split_index});
                    return qdet::qdet_factor_split(h, split_index);
                }
                return qdet::hessenberg_qdet(h);
            }();
            qdet::TypedDocument<Entry> out(qdet::BlockPartition({h.top_rows()}),
                                           qdet::BlockPartition({h.last_cols()}), true);
            out.blocks.emplace(std::make_pair(1, 1), value);
            write_output(qdet::serialize_document(out), opts.output);
            return 0;
        },
        doc);
}

int cmd_perturb(const qdet::Document& mdoc, const qdet::Document& edoc, const GlobalOptions& opts,
                int split, bool full) {
    if (mdoc.index() != edoc.index())
        throw qdet::ShapeError("matrix and perturbation documents use different ring tags");
    return std::visit(
        [&](const auto& typed) -> int {
            using Entry = std::decay_t<decltype(typed.to_grid().block(1, 1).at(0, 0))>;
            const auto& etyped = std::get<qdet::TypedDocument<Entry>>(edoc);
            auto m = to_triangular(typed);
            auto e = qdet::PerturbationBlock<Entry>::create(etyped.to_grid(), split, m.partition());
            if (full) {
                auto updated = qdet::perturbed_inverse(m, e);
                write_output(qdet::serialize_document(inverse_to_document(updated)), opts.output);
                return 0;
            }
            auto base = qdet::inverse_explicit(m);
            qdet::TypedDocument<Entry> out(m.partition(), m.partition(), false);
            for (int j = 1; j <= split; ++j)
                for (int k = split + 1; k <= m.n(); ++k)
                    out.blocks.emplace(std::make_pair(j, k), qdet::perturbation_delta(base, e, j, k));
            write_output(qdet::serialize_document(out), opts.output);
            return 0;
        },
        mdoc);
}

int cmd_check(const qdet::Document& doc, const GlobalOptions& opts) {
    return std::visit(
        [&](const auto& typed) -> int {
            using Entry = std::decay_t<decltype(typed.to_grid().block(1, 1).at(0, 0))>;
            auto m = to_triangular(typed);
            ordered_json checks = ordered_json::array();
            bool all_pass = true;
            auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
                ordered_json c;
                c["name"] = name;
                c["pass"] = pass;
                if (!detail.empty()) c["detail"] = detail;
                checks.push_back(c);
                all_pass = all_pass && pass;
            };

            record("triangular-structure", true);
            auto exp = qdet::inverse_explicit(m);
            auto rec = qdet::inverse_recursive(m);
            auto itr = qdet::inverse_iterative(m);
            {
                auto bad = first_disagreement(exp, rec);
                record("explicit-recursive-agreement", !bad,
                       bad ? "first mismatch at block (" + std::to_string(bad->first) + ", " +
                                 std::to_string(bad->second) + ")"
                           : "");
            }
            {
                auto bad = first_disagreement(exp, itr);
                record("explicit-iterative-agreement", !bad,
                       bad ? "first mismatch at block (" + std::to_string(bad->first) + ", " +
                                 std::to_string(bad->second) + ")"
                           : "");
            }
            {
                auto id = qdet::Mat<Entry>::identity(m.partition().total(), m.block(1, 1).at(0, 0));
                record("right-inverse-identity", blocks_agree(m.grid().data() * exp.assemble(), id));
                record("left-inverse-identity", blocks_agree(exp.assemble() * m.grid().data(), id));
            }

            ordered_json report;
            report["pass"] = all_pass;
            report["checks"] = checks;
            write_output(report.dump(2) + "\n", opts.output);
            return all_pass ? 0 : 4;
        },
        doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasideterminants and block triangular inversion over quaternion rings"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--output", opts.output, "write the result document here instead of stdout");
    app.add_option("--tolerance", opts.tolerance, "float-mode zero tolerance")
        ->envname("QDET_TOLERANCE")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-expansion", opts.max_expansion,
                   "largest grid size the expansion method will enumerate")
        ->check(CLI::PositiveNumber);

    std::string invert_input, invert_method = "explicit";
    bool invert_check = false;
    auto* invert = app.add_subcommand("invert", "invert a block upper triangular matrix");
    invert->add_option("--input", invert_input, "matrix document")->required();
    invert->add_option("--method", invert_method, "inversion method")
        ->check(CLI::IsMember({"explicit", "recursive", "iterative"}));
    invert->add_flag("--check", invert_check, "run all three methods and fail on mismatch");

    std::string qdet_input, qdet_method = "solve";
    int qdet_split_index = 1;
    auto* qdet_cmd = app.add_subcommand("qdet", "Hessenberg quasideterminant of a grid document");
    qdet_cmd->add_option("--input", qdet_input, "Hessenberg grid document")->required();
    qdet_cmd->add_option("--method", qdet_method, "evaluation route")
        ->check(CLI::IsMember({"solve", "expansion", "split"}));
    qdet_cmd->add_option("--split-index", qdet_split_index, "split position for --method split");

    std::string perturb_input, perturb_file;
    int perturb_split = 0;
    bool perturb_full = false;
    auto* perturb = app.add_subcommand("perturb", "effect of an off-diagonal rectangular perturbation");
    perturb->add_option("--input", perturb_input, "matrix document")->required();
    perturb->add_option("--perturbation", perturb_file, "perturbation document")->required();
    perturb->add_option("--split", perturb_split, "split position: rows 1..l, columns l+1..n")->required();
    perturb->add_flag("--full", perturb_full, "emit the perturbed inverse instead of the deltas");

    std::string check_input;
    auto* check = app.add_subcommand("check", "run the invariant suite on a matrix document");
    check->add_option("--input", check_input, "matrix document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 5;
    }

    qdet::set_float_tolerance(opts.tolerance);

    try {
        if (invert->parsed())
            return cmd_invert(qdet::parse_document(read_file(invert_input)), opts, invert_method,
                              invert_check);
        if (qdet_cmd->parsed())
            return cmd_qdet(qdet::parse_document(read_file(qdet_input)), opts, qdet_method,
                            qdet_split_index);
        if (perturb->parsed())
            return cmd_perturb(qdet::parse_document(read_file(perturb_input)),
                               qdet::parse_document(read_file(perturb_file)), opts, perturb_split,
                               perturb_full);
        if (check->parsed()) return cmd_check(qdet::parse_document(read_file(check_input)), opts);
    } catch (const qdet::Error& e) {
        emit_error(e.code(), e.what(), e.indices());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        emit_error("internal", e.what(), {});
        return 2;
    }
    return 5;
}
