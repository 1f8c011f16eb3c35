#include "tropcomm/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace tropcomm {

TropMatrix read_matrix(std::istream& in, const std::string& name) {
    auto loc = [&](int line) { return name + ":" + std::to_string(line); };

    std::string header;
    int line_no = 1;
    while (std::getline(in, header)) {
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
        ++line_no;
        header.clear();
    }
    std::istringstream hs(header);
    long rows = -1, cols = -1;
    if (!(hs >> rows >> cols) || rows < 1 || cols < 1 || rows > 4096 || cols > 4096)
        throw ParseError(loc(line_no), "expected header 'rows cols'");
    std::string trailing;
    if (hs >> trailing) throw ParseError(loc(line_no), "trailing token '" + trailing + "' in header");

    TropMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < rows; ++i) {
        std::string row_text;
        do {
            ++line_no;
            if (!std::getline(in, row_text))
                throw ParseError(loc(line_no), "unexpected end of input, expected row " +
                                                   std::to_string(i + 1));
        } while (row_text.find_first_not_of(" \t\r") == std::string::npos);
        std::istringstream rs(row_text);
        std::string tok;
        for (int j = 0; j < cols; ++j) {
            if (!(rs >> tok))
                throw ParseError(loc(line_no), "row " + std::to_string(i + 1) + " has " +
                                                   std::to_string(j) + " of " +
                                                   std::to_string(cols) + " entries");
            m.at(i, j) = parse_ext_real(tok, loc(line_no));
        }
        if (rs >> tok)
            throw ParseError(loc(line_no),
                             "row " + std::to_string(i + 1) + " has trailing token '" + tok + "'");
    }
    return m;
}

TropMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    return read_matrix(in, path);
}

TropMatrix parse_matrix(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    return read_matrix(in, name);
}

void write_matrix(std::ostream& out, const TropMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << to_string(m.at(i, j));
        }
        out << "\n";
    }
}

std::string format_matrix(const TropMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

} // namespace tropcomm
