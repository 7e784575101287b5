#include "lgrass/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lgrass {

std::string to_sms(const BinaryMatrix& m) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << " M\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) out << (r + 1) << " " << (c + 1) << " 1\n";
        }
    }
    out << "0 0 0\n";
    return out.str();
}

BinaryMatrix read_sms(std::istream& in) {
    int rows = 0, cols = 0;
    std::string kind;
    if (!(in >> rows >> cols >> kind)) throw std::runtime_error("SMS: malformed header");
    if (rows < 0 || cols < 0) throw std::runtime_error("SMS: negative dimensions");
    BinaryMatrix m(rows, cols);
    long long r = 0, c = 0;
    std::string value;
    while (in >> r >> c >> value) {
        if (r == 0 && c == 0 && value == "0") return m;
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw std::runtime_error("SMS: entry out of bounds");
        if (value != "1") throw std::runtime_error("SMS: expected unit entries in a 0/1 matrix");
        m.set(static_cast<int>(r - 1), static_cast<int>(c - 1));
    }
    throw std::runtime_error("SMS: missing 0 0 0 terminator");
}

std::string to_csv(const BinaryMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            out << (m.get(r, c) ? 1 : 0);
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const BinaryMatrix& m) {
    std::ostringstream out;
    out << "{\"nrows\": " << m.rows() << ", \"ncols\": " << m.cols() << ", \"entries\": [";
    bool first = true;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (!m.get(r, c)) continue;
            if (!first) out << ", ";
            out << "[" << (r + 1) << ", " << (c + 1) << "]";
            first = false;
        }
    }
    out << "]}\n";
    return out.str();
}

PluckerVector read_plucker(std::istream& in, int n) {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::pair<MultiIndex, std::int64_t>> entries;
    std::string line;
    int line_no = 0;
    bool saw_coordinate = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first == "char") {
            if (saw_coordinate)
                throw std::runtime_error("line " + std::to_string(line_no) + ": field declared after coordinates");
            std::uint64_t ch = 0;
            if (!(ls >> ch)) throw std::runtime_error("line " + std::to_string(line_no) + ": malformed characteristic");
            field = ch == 0 ? FieldSpec::rationals() : FieldSpec::gf(ch);
            continue;
        }
        std::vector<int> idx(static_cast<size_t>(n));
        std::istringstream entry(line);
        for (int i = 0; i < n; ++i) {
            if (!(entry >> idx[static_cast<size_t>(i)]))
                throw std::runtime_error("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                                         " index entries and a value");
        }
        std::int64_t value = 0;
        if (!(entry >> value))
            throw std::runtime_error("line " + std::to_string(line_no) + ": missing coordinate value");
        try {
            entries.emplace_back(MultiIndex(std::move(idx), 2 * n), value);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        saw_coordinate = true;
    }
    PluckerVector v(n, field);
    for (auto& [beta, value] : entries) v.set(beta, value);
    return v;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace lgrass
