#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uqaff/freealg.hpp"
#include "uqaff/rmatrix.hpp"

namespace uqaff::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt_residual(double r) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << r;
    return os.str();
}

template <class T, class F>
ojson matrix_json(const SparseMatrix<T>& m, F str) {
    ojson j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ojson entries = ojson::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i)) entries.push_back({i, c, str(v)});
    j["entries"] = entries;
    return j;
}

template <class T, class F>
std::string matrix_text(const SparseMatrix<T>& m, F str) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [c, v] : m.row(i)) os << "(" << i << "," << c << "): " << str(v) << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    f << body;
    if (body.empty() || body.back() != '\n') f << "\n";
}

template <class T, class F>
void export_matrix(const RunConfig& cfg, const SparseMatrix<T>& m, F str) {
    if (cfg.out.empty()) return;
    write_file(cfg.out, cfg.format == "text" ? matrix_text(m, str) : matrix_json(m, str).dump());
}

auto scalar_str = [](const Scalar& x) { return x.to_string(); };
auto atom_str = [](const AtomPoly& x) { return x.to_string(); };

void require_symbolic_q(const RunConfig& cfg) {
    if (cfg.q != "q") throw UsageError(cfg.command + " is exact; --q must be left symbolic");
}

void require_default_a(const RunConfig& cfg) {
    if (!cfg.a.empty() && cfg.a != "q^-2*w" && cfg.a != "default")
        throw UsageError("the vector representation is defined at a = q^-2*w only");
}

int emit(std::ostream& os, const std::vector<CheckResult>& rs, const std::string& prefix = "") {
    bool ok = true;
    for (const auto& r : rs) {
        report_line(os, r.id, prefix + join_params(r.params), r.pass, r.residual);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

int cmd_relations(const RunConfig& cfg, std::ostream& os) {
    require_symbolic_q(cfg);
    const int h = cfg.height < 0 ? 4 : cfg.height;
    std::optional<Scalar> perturb;
    if (!cfg.perturb.empty()) perturb = Scalar::parse(cfg.perturb);
    bool ok = true;
    for (std::string pre : {"EQ", "FQ"}) {
        for (int i = 1; i <= 10; ++i) {
            std::string id = pre + std::to_string(i);
            for (const auto& p : relation_index_tuples(id, h)) {
                RelationResult r = perturb ? verify_relation(id, p, *perturb) : verify_relation(id, p);
                std::string res = r.pass ? "0" : std::to_string(r.residual.terms().size()) + " terms";
                report_line(os, id, join_params(p), r.pass, res);
                ok = ok && r.pass;
            }
        }
    }
    return ok ? 0 : 1;
}

int cmd_pairing(const RunConfig& cfg, std::ostream& os) {
    require_symbolic_q(cfg);
    return emit(os, verify_pbw_pairing(cfg.height < 0 ? 4 : cfg.height));
}

RepConfig rep_config(const RunConfig& cfg) {
    if (cfg.N < 1) throw UsageError("--N must be positive");
    RepConfig c;
    c.N = cfg.N;
    return c;
}

int cmd_rep(const RunConfig& cfg, std::ostream& os) {
    require_symbolic_q(cfg);
    require_default_a(cfg);
    RepConfig c = rep_config(cfg);
    int rc = emit(os, verify_rep(c, cfg.height, 4), "N=" + std::to_string(c.N) + " ");
    if (!cfg.out.empty()) {
        ojson j;
        std::string text;
        for (std::string g : {"E0", "E1", "F0", "F1", "K0", "K1", "L0", "L1"}) {
            SMat m = rho(g, c);
            j[g] = matrix_json(m, scalar_str);
            text += "# " + g + "\n" + matrix_text(m, scalar_str);
        }
        write_file(cfg.out, cfg.format == "text" ? text : j.dump());
    }
    return rc;
}

int cmd_rmatrix(const RunConfig& cfg, std::ostream& os) {
    require_symbolic_q(cfg);
    const int N = cfg.N;
    if (N < 1) throw UsageError("--N must be positive");
    const std::string mode = cfg.mode.empty() ? "atoms" : cfg.mode;
    const std::string params = "N=" + std::to_string(N);
    if (mode == "series") {
        if (cfg.order < 1) throw UsageError("--order must be at least 1");
        SMat r = assemble_R_series(N, cfg.order);
        report_line(os, "RMAT-SERIES", params + " K=" + std::to_string(cfg.order), true, std::to_string(r.nnz()) + " entries");
        export_matrix(cfg, r, scalar_str);
        return 0;
    }
    if (mode != "atoms") throw UsageError("--mode must be atoms or series for rmatrix");
    AMat r = assemble_R_atoms(N);
    if (N == 1) {
        SMat m = r1_from_atoms(r);
        auto diff = diff_report(m, r1_transcription());
        report_line(os, "RMAT-R1", params, diff.empty(), std::to_string(diff.size()) + " mismatches");
        for (const auto& d : diff) os << "  " << d << "\n";
        export_matrix(cfg, m, scalar_str);
        return diff.empty() ? 0 : 1;
    }
    if (N == 2) {
        SMat m = to_display_order(r2_from_atoms(r), 2);
        auto diff = diff_report(m, r2_transcription());
        report_line(os, "RMAT-R2-DIFF", params, diff.empty(), std::to_string(diff.size()) + " mismatches");
        for (const auto& d : diff) os << "  " << d << "\n";
        export_matrix(cfg, m, scalar_str);
        return diff.empty() ? 0 : 1;
    }
    report_line(os, "RMAT-ATOMS", params, true, std::to_string(r.nnz()) + " entries");
    export_matrix(cfg, r, atom_str);
    return 0;
}

int cmd_ybe(const RunConfig& cfg, std::ostream& os) {
    const std::string mode = cfg.mode.empty() ? "exact" : cfg.mode;
    const std::string params = "N=" + std::to_string(cfg.N);
    if (mode == "exact") {
        require_symbolic_q(cfg);
        if (cfg.N != 1 && cfg.N != 2) throw UsageError("exact YBE is available for N = 1 and N = 2");
        YbeResult r = ybe_exact(cfg.N);
        report_line(os, "YBE-EXACT", params, r.pass, r.detail);
        return r.pass ? 0 : 1;
    }
    if (mode != "numeric") throw UsageError("--mode must be exact or numeric for ybe");
    double qv = 0;
    try {
        size_t used = 0;
        qv = std::stod(cfg.q, &used);
        if (used != cfg.q.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw UsageError("numeric ybe needs a real --q");
    }
    if (std::abs(std::abs(qv) - 1) < 1e-12 || qv == 0) throw UsageError("numeric ybe needs 0 < |q| != 1");
    if (cfg.N < 1) throw UsageError("--N must be positive");
    if (!disk_constraints_ok(qv, cfg.z, cfg.w)) throw UsageError("(z, w) violates the disk constraints");
    std::ostringstream p;
    p << params << " q=" << cfg.q << " z=" << cfg.z << " w=" << cfg.w;
    YbeResult r = ybe_numeric(cfg.N, qv, cfg.z, cfg.w);
    report_line(os, "YBE-NUMERIC", p.str(), r.pass, fmt_residual(r.residual));
    return r.pass ? 0 : 1;
}

}  // namespace

void report_line(std::ostream& os, const std::string& id, const std::string& params, bool pass, const std::string& residual) {
    os << id << " | " << params << " | " << (pass ? "PASS" : "FAIL") << " | " << residual << "\n";
}

std::string join_params(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

int run(const RunConfig& cfg, std::ostream& os) {
    if (cfg.format != "json" && cfg.format != "text") throw UsageError("--format must be json or text");
    try {
        if (cfg.command == "relations") return cmd_relations(cfg, os);
        if (cfg.command == "pairing") return cmd_pairing(cfg, os);
        if (cfg.command == "rep") return cmd_rep(cfg, os);
        if (cfg.command == "rmatrix") return cmd_rmatrix(cfg, os);
        if (cfg.command == "ybe") return cmd_ybe(cfg, os);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown command " + cfg.command);
}

}  // namespace uqaff::cli
