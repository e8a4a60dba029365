#include "braidforge/repfile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace braidforge {

namespace {

using nlohmann::json;

// %.17g round-trips doubles exactly.
std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_matrix(std::ostream& os, const CMatrix& m, const std::string& indent) {
    os << "[";
    for (index_t i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << "\n" << indent << "  [";
        for (index_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << "[" << fmt_double(m(i, j).real()) << ", " << fmt_double(m(i, j).imag()) << "]";
        }
        os << "]";
    }
    if (m.rows()) os << "\n" << indent;
    os << "]";
}

void emit_matrix_map(std::ostream& os, const std::map<std::string, CMatrix>& mats,
                     const char* name, bool& need_comma) {
    if (mats.empty()) return;
    if (need_comma) os << ",";
    os << "\n  \"" << name << "\": {";
    bool first = true;
    for (const auto& [key, m] : mats) {
        if (!first) os << ",";
        first = false;
        os << "\n    \"" << key << "\": ";
        emit_matrix(os, m, "    ");
    }
    os << "\n  }";
    need_comma = true;
}

CMatrix parse_matrix(const json& jm, const std::string& what) {
    if (!jm.is_array()) throw parse_error("RepFile: matrix " + what + " must be an array of rows");
    const index_t rows = static_cast<index_t>(jm.size());
    if (rows == 0) return CMatrix(0, 0);
    const index_t cols = static_cast<index_t>(jm[0].size());
    CMatrix m(rows, cols);
    for (index_t i = 0; i < rows; ++i) {
        const auto& row = jm[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<index_t>(row.size()) != cols)
            throw parse_error("RepFile: ragged matrix " + what);
        for (index_t j = 0; j < cols; ++j) {
            const auto& e = row[static_cast<size_t>(j)];
            if (!e.is_array() || e.size() != 2)
                throw parse_error("RepFile: entries of " + what + " must be [re, im]");
            m(i, j) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    if (!m.is_finite()) throw parse_error("RepFile: non-finite entries in " + what);
    return m;
}

std::map<std::string, CMatrix> parse_matrix_map(const json& j, const char* name) {
    std::map<std::string, CMatrix> out;
    if (!j.contains(name)) return out;
    for (const auto& [key, val] : j.at(name).items()) out[key] = parse_matrix(val, key);
    return out;
}

} // namespace

std::string free_key(int j) { return "x" + std::to_string(j); }
std::string braid_key(int i) { return "s" + std::to_string(i); }
std::string pure_key(int i, int j) {
    return "m_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string emit_repfile(const RepFile& f) {
    std::ostringstream os;
    os << "{";
    os << "\n  \"schema_version\": \"" << f.schema_version << "\",";
    os << "\n  \"kind\": \"" << (f.kind == RepFile::Kind::Semidirect ? "semidirect" : "pure_anti")
       << "\",";
    os << "\n  \"n\": " << f.n << ",";
    os << "\n  \"N\": " << f.N << ",";
    os << "\n  \"k\": " << f.k;
    bool need_comma = true;
    if (f.kind == RepFile::Kind::PureAnti) {
        os << ",\n  \"anti\": " << (f.anti ? "true" : "false");
    }
    emit_matrix_map(os, f.g, "g", need_comma);
    emit_matrix_map(os, f.s, "s", need_comma);
    emit_matrix_map(os, f.M, "M", need_comma);
    if (f.H) {
        os << ",\n  \"H\": ";
        emit_matrix(os, *f.H, "  ");
    }
    if (!f.metadata.empty()) {
        os << ",\n  \"metadata\": {";
        bool first = true;
        for (const auto& [key, val] : f.metadata) {
            if (!first) os << ",";
            first = false;
            os << "\n    " << json(key).dump() << ": " << json(val).dump();
        }
        os << "\n  }";
    }
    os << "\n}\n";
    return os.str();
}

void save_repfile(const RepFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("save_repfile: cannot open " + path);
    out << emit_repfile(f);
}

RepFile load_repfile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("load_repfile: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("load_repfile: " + std::string(e.what()));
    }
    RepFile f;
    try {
        f.schema_version = j.value("schema_version", "1.0");
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "semidirect") f.kind = RepFile::Kind::Semidirect;
        else if (kind == "pure_anti") f.kind = RepFile::Kind::PureAnti;
        else throw parse_error("load_repfile: unknown kind '" + kind + "'");
        f.n = j.at("n").get<int>();
        f.N = j.at("N").get<index_t>();
        f.k = j.value("k", 1L);
        f.anti = j.value("anti", true);
        f.g = parse_matrix_map(j, "g");
        f.s = parse_matrix_map(j, "s");
        f.M = parse_matrix_map(j, "M");
        if (j.contains("H")) f.H = parse_matrix(j.at("H"), "H");
        if (j.contains("metadata"))
            for (const auto& [key, val] : j.at("metadata").items())
                f.metadata[key] = val.is_string() ? val.get<std::string>() : val.dump();
    } catch (const json::exception& e) {
        throw parse_error("load_repfile: " + std::string(e.what()));
    }
    return f;
}

SemidirectRep to_semidirect(const RepFile& f) {
    if (f.kind != RepFile::Kind::Semidirect)
        throw validation_error("to_semidirect: file kind is not semidirect");
    if (f.n < 2) throw validation_error("to_semidirect: n must be >= 2");
    SemidirectRep rep;
    rep.n = f.n;
    rep.N = f.N;
    rep.action_exponent = f.k;
    if (!f.g.empty()) {
        for (int j = 1; j <= f.n; ++j) {
            auto it = f.g.find(free_key(j));
            if (it == f.g.end())
                throw validation_error("to_semidirect: missing generator " + free_key(j));
            if (it->second.rows() != f.N || !it->second.square())
                throw validation_error("to_semidirect: " + free_key(j) + " has wrong shape");
            rep.g.push_back(it->second);
        }
    }
    for (const auto& [key, m] : f.s) {
        if (key.size() < 2 || key[0] != 's')
            throw validation_error("to_semidirect: bad braid key " + key);
        const int i = std::stoi(key.substr(1));
        if (i < 1 || i > f.n - 1) throw validation_error("to_semidirect: braid index out of range");
        if (m.rows() != f.N || !m.square())
            throw validation_error("to_semidirect: " + key + " has wrong shape");
        rep.s[i] = m;
    }
    if (f.H) rep.H = make_hermitian_form(*f.H);
    return rep;
}

PureBraidAntiRep to_pure_anti(const RepFile& f) {
    if (f.kind != RepFile::Kind::PureAnti)
        throw validation_error("to_pure_anti: file kind is not pure_anti");
    PureBraidAntiRep rep;
    rep.n = f.n;
    rep.N = f.N;
    rep.anti = f.anti;
    for (int i = 0; i <= f.n; ++i) {
        for (int j = i + 1; j <= f.n; ++j) {
            auto it = f.M.find(pure_key(i, j));
            if (it == f.M.end())
                throw validation_error("to_pure_anti: missing generator " + pure_key(i, j));
            if (it->second.rows() != f.N || !it->second.square())
                throw validation_error("to_pure_anti: " + pure_key(i, j) + " has wrong shape");
            rep.M[{i, j}] = it->second;
        }
    }
    return rep;
}

RepFile from_semidirect(const SemidirectRep& rep, std::map<std::string, std::string> metadata) {
    RepFile f;
    f.kind = RepFile::Kind::Semidirect;
    f.n = rep.n;
    f.N = rep.N;
    f.k = rep.action_exponent;
    for (int j = 1; j <= static_cast<int>(rep.g.size()); ++j)
        f.g[free_key(j)] = rep.g[static_cast<size_t>(j - 1)];
    for (const auto& [i, m] : rep.s) f.s[braid_key(i)] = m;
    if (rep.H) f.H = rep.H->matrix;
    f.metadata = std::move(metadata);
    return f;
}

RepFile from_pure_anti(const PureBraidAntiRep& rep, std::map<std::string, std::string> metadata) {
    RepFile f;
    f.kind = RepFile::Kind::PureAnti;
    f.n = rep.n;
    f.N = rep.N;
    f.anti = rep.anti;
    for (const auto& [key, m] : rep.M) f.M[pure_key(key.first, key.second)] = m;
    f.metadata = std::move(metadata);
    return f;
}

std::string signature_report_json(const SignatureReport& r) {
    std::ostringstream os;
    os << "{\"p\": " << r.inertia.p << ", \"q\": " << r.inertia.q << ", \"z\": " << r.inertia.z
       << ", \"fallback_used\": " << (r.fallback_used ? "true" : "false") << ", \"oracle\": {\"p\": "
       << r.oracle.p << ", \"q\": " << r.oracle.q << ", \"z\": " << r.oracle.z << "}, \"steps\": [";
    for (size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        if (i) os << ", ";
        os << "{\"block_dim\": " << s.block_dim << ", \"nonzero_count\": " << s.nonzero_count
           << ", \"pivot_p\": " << s.pivot_p << ", \"pivot_q\": " << s.pivot_q
           << ", \"offdiag_kernel_residual\": " << fmt_double(s.offdiag_kernel_residual) << "}";
    }
    os << "]}";
    return os.str();
}

} // namespace braidforge
