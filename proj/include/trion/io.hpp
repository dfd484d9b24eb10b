#pragma once

// File formats: the symmetric-matrix text format, CSV emitters for traces,
// spectra and Pauli terms, and a tiny deterministic JSON writer for run
// summaries.  All numeric output uses 17 significant digits; CSV metadata
// lives in leading '#' comment lines and never contains timestamps, so a
// rerun with the same flags and seed is byte-identical.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trion/encoding.hpp"
#include "trion/textio.hpp"
#include "trion/vqe.hpp"

namespace trion {

// --- symmetric matrix text format -----------------------------------------
//
//   <N> rows symmetric
//   row-major upper triangle, whitespace separated

inline std::string matrix_to_text(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw SizeError("matrix_to_text: matrix not square");
    std::ostringstream out;
    out << m.rows() << " rows symmetric\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j)
            out << g17(m(i, j)) << (j + 1 < m.cols() ? " " : "");
        out << "\n";
    }
    return out.str();
}

inline Eigen::MatrixXd matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    Eigen::Index n = 0;
    std::string word1, word2;
    if (!(in >> n >> word1 >> word2) || word1 != "rows" || word2 != "symmetric")
        throw IoError("matrix text: expected header '<N> rows symmetric'");
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            double v;
            if (!(in >> v)) throw IoError("matrix text: truncated upper triangle");
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

inline void write_matrix_file(const std::string& path, const Eigen::MatrixXd& m) {
    write_text_file(path, matrix_to_text(m));
}

inline Eigen::MatrixXd read_matrix_file(const std::string& path) {
    return matrix_from_text(read_text_file(path));
}

// --- CSV --------------------------------------------------------------------

inline std::string metadata_block(const std::vector<std::string>& meta) {
    std::string s;
    for (const auto& line : meta) s += "# " + line + "\n";
    return s;
}

inline std::string csv_number(double v) {
    if (std::isnan(v)) return "";
    return g17(v);
}

inline std::string spectrum_to_csv(const Eigen::VectorXd& eigenvalues,
                                   const std::vector<std::string>& meta) {
    std::string s = metadata_block(meta);
    s += "index,eigenvalue\n";
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        s += std::to_string(i) + "," + g17(eigenvalues[i]) + "\n";
    return s;
}

// include_timing=false zeroes the wall-clock column so default outputs stay
// reproducible byte-for-byte.
inline std::string trace_to_csv(const RunTrace& trace, const std::vector<std::string>& meta,
                                bool include_timing = false) {
    std::string s = metadata_block(meta);
    s += "eval,energy,error_vs_diag,error_vs_exact,fidelity,grad_norm,elapsed_s\n";
    for (const auto& r : trace.records) {
        s += std::to_string(r.eval) + "," + g17(r.energy) + "," + g17(r.err_diag) + "," +
             csv_number(r.err_exact) + "," + g17(r.fidelity) + "," + g17(r.grad_norm) + "," +
             (include_timing ? g17(r.elapsed_s) : std::string("0")) + "\n";
    }
    return s;
}

inline std::string adapt_iterations_to_csv(const AdaptTrace& adapt,
                                           const std::vector<std::string>& meta) {
    std::string s = metadata_block(meta);
    s += "iteration,operator,g_norm,energy,error_vs_diag,cumulative_evals\n";
    for (const auto& it : adapt.iterations) {
        s += std::to_string(it.index) + "," + it.op + "," + g17(it.g_norm) + "," +
             g17(it.energy) + "," + g17(it.err_diag) + "," +
             std::to_string(it.cumulative_evals) + "\n";
    }
    return s;
}

inline std::string pauli_terms_to_csv(const EncodedOperator& enc,
                                      const std::vector<std::string>& meta) {
    std::string s = metadata_block(meta);
    s += "string,coefficient\n";
    for (const auto& t : enc.terms) s += t.op.ops_str() + "," + g17(t.coeff) + "\n";
    return s;
}

// --- minimal JSON writer ----------------------------------------------------

class JsonWriter {
  public:
    JsonWriter& field(const std::string& key, const std::string& value) {
        add(key, "\"" + value + "\"");
        return *this;
    }
    JsonWriter& field(const std::string& key, const char* value) {
        return field(key, std::string(value));
    }
    JsonWriter& field(const std::string& key, double value) {
        add(key, std::isnan(value) ? "null" : g17(value));
        return *this;
    }
    JsonWriter& field(const std::string& key, long value) {
        add(key, std::to_string(value));
        return *this;
    }
    JsonWriter& field(const std::string& key, int value) {
        add(key, std::to_string(value));
        return *this;
    }
    JsonWriter& field(const std::string& key, unsigned long long value) {
        add(key, std::to_string(value));
        return *this;
    }
    JsonWriter& field(const std::string& key, bool value) {
        add(key, value ? "true" : "false");
        return *this;
    }

    std::string str() const { return "{\n" + body_ + "\n}\n"; }

  private:
    void add(const std::string& key, const std::string& rendered) {
        if (!body_.empty()) body_ += ",\n";
        body_ += "  \"" + key + "\": " + rendered;
    }
    std::string body_;
};

} // namespace trion
