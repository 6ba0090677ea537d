#include "dodgson/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace dodgson {

namespace {

bool is_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return false;
}

bool is_blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

int parse_count(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + " in matrix header: '" + tok + "'");
    }
}

}  // namespace

Matrix read_matrix(std::istream& in) {
    std::optional<RingDomain> domain;
    std::vector<std::string> tokens;
    std::string line;
    bool have_size = false;
    int rows = 0, cols = 0;

    while (std::getline(in, line)) {
        if (is_comment(line) || is_blank(line)) continue;
        std::istringstream ls(line);
        if (!have_size) {
            std::string first;
            ls >> first;
            if (first == "@domain") {
                std::string rest, tok;
                std::getline(ls, rest);
                if (domain) throw Error("duplicate @domain directive");
                domain = RingDomain::parse(rest);
                continue;
            }
            std::string second, extra;
            if (ls >> second) {
                if (ls >> extra) throw Error("matrix size line has too many fields: '" + line + "'");
                rows = parse_count(first, "row count");
                cols = parse_count(second, "column count");
            } else {
                rows = cols = parse_count(first, "size");
            }
            have_size = true;
            continue;
        }
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (!have_size) throw Error("matrix text has no size line");

    // Re-join "r mod p" triples into single entry strings.
    std::vector<std::string> entries;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i + 2 < tokens.size() && tokens[i + 1] == "mod") {
            entries.push_back(tokens[i] + " mod " + tokens[i + 2]);
            i += 2;
        } else {
            entries.push_back(tokens[i]);
        }
    }
    size_t expect = static_cast<size_t>(rows) * cols;
    if (entries.size() != expect)
        throw Error("matrix body has " + std::to_string(entries.size()) + " entries, expected " +
                    std::to_string(expect));

    if (!domain) {
        DomainKind kind = DomainKind::integers;
        std::string mod;
        for (const auto& e : entries) {
            auto at = e.find(" mod ");
            if (at != std::string::npos) {
                kind = DomainKind::prime_field;
                mod = e.substr(at + 5);
                break;
            }
            if (e.find('/') != std::string::npos) kind = DomainKind::rationals;
        }
        switch (kind) {
            case DomainKind::integers: domain = RingDomain::integers(); break;
            case DomainKind::rationals: domain = RingDomain::rationals(); break;
            case DomainKind::prime_field: domain = RingDomain::prime_field(mpz_class(mod)); break;
        }
    }

    Matrix m(*domain, rows, cols);
    size_t idx = 0;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) m.set(i, j, Scalar::parse(entries[idx++], *domain));
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file: " + path);
    try {
        return read_matrix(in);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

void write_matrix(std::ostream& out, const Matrix& m, bool with_domain) {
    if (with_domain) out << "@domain " << m.domain().name() << "\n";
    if (m.rows() == m.cols())
        out << m.rows() << "\n";
    else
        out << m.rows() << " " << m.cols() << "\n";
    bool field = m.domain().kind() == DomainKind::prime_field;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) out << " ";
            if (field)
                out << m.at(i, j).int_value().get_str();
            else
                out << m.at(i, j).str();
        }
        out << "\n";
    }
}

std::string matrix_to_string(const Matrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace dodgson
