#include "zdet/matrix.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "json.hpp"

namespace zdet {

namespace {

bool is_integer_token(const std::string& tok) {
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

IntegerMatrix parse_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, "empty input, expected dimension");
    line = strip_cr(line);

    const auto header = split_ws(line);
    if (header.size() != 1 || !is_integer_token(header[0]) || header[0][0] == '-')
        throw ParseError(1, "malformed header, expected a single positive dimension");
    mpz_class n_big(header[0], 10);
    if (n_big < 1) throw ParseError(1, "dimension must be >= 1");
    if (!n_big.fits_sint_p())
        throw ParseError(1, "dimension too large");
    const int n = static_cast<int>(n_big.get_si());

    IntegerMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const int lineno = i + 2;
        if (!std::getline(in, line))
            throw ParseError(lineno, "unexpected end of input, expected row " +
                                         std::to_string(i + 1));
        line = strip_cr(line);
        const auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError(lineno, "row " + std::to_string(i + 1) + " has " +
                                         std::to_string(toks.size()) +
                                         " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (!is_integer_token(toks[j]))
                throw ParseError(lineno, "non-integer token '" + toks[j] + "'");
            a(i, j) = mpz_class(toks[j], 10);
        }
    }

    int lineno = n + 2;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (!split_ws(line).empty())
            throw ParseError(lineno, "trailing content after matrix");
        ++lineno;
    }
    return a;
}

IntegerMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string serialize_matrix(const IntegerMatrix& a) {
    std::string out = std::to_string(a.n());
    out += '\n';
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            if (j) out += ' ';
            out += a(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

IntegerMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw ParseError(0, "JSON: expected object with fields \"n\" and \"entries\"");
    if (!doc["n"].is_number_integer() && !doc["n"].is_number_unsigned())
        throw ParseError(0, "JSON: \"n\" must be an integer");
    const long long n_ll = doc["n"].get<long long>();
    if (n_ll < 1) throw ParseError(0, "JSON: dimension must be >= 1");
    if (n_ll > (1LL << 30)) throw ParseError(0, "JSON: dimension too large");
    const int n = static_cast<int>(n_ll);

    const auto& rows = doc["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError(0, "JSON: \"entries\" must be an array of " +
                                std::to_string(n) + " rows");
    IntegerMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(0, "JSON: row " + std::to_string(i + 1) + " has " +
                                    std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const auto& cell = row[j];
            if (cell.is_number_integer() || cell.is_number_unsigned()) {
                a(i, j) = static_cast<long>(cell.get<long long>());
            } else if (cell.is_string()) {
                const std::string s = cell.get<std::string>();
                if (s.empty() || !is_integer_token(s))
                    throw ParseError(0, "JSON: non-integer string entry '" + s + "'");
                a(i, j) = mpz_class(s, 10);
            } else {
                throw ParseError(0, "JSON: entries must be integers or decimal strings");
            }
        }
    }
    return a;
}

std::string serialize_matrix_json(const IntegerMatrix& a) {
    static const mpz_class kDoubleExact = mpz_class(1) << 53;
    nlohmann::ordered_json doc;
    doc["n"] = a.n();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < a.n(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < a.n(); ++j) {
            const mpz_class& e = a(i, j);
            if (abs(e) <= kDoubleExact)
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump() + "\n";
}

IntegerMatrix random_matrix(int n, std::uint64_t entry_bound, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    if (entry_bound < 1 || entry_bound > (1ULL << 62))
        throw std::invalid_argument("entry_bound must be in [1, 2^62]");
    Rng rng(seed);
    IntegerMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = static_cast<long>(rng.next_symmetric(entry_bound));
    return a;
}

IntegerVector random_vector(int n, std::uint64_t entry_bound, Rng& rng) {
    if (n < 1) throw std::invalid_argument("vector dimension must be >= 1");
    if (entry_bound < 1 || entry_bound > (1ULL << 62))
        throw std::invalid_argument("entry_bound must be in [1, 2^62]");
    IntegerVector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = static_cast<long>(rng.next_symmetric(entry_bound));
    return v;
}

mpz_class ceil_sqrt(const mpz_class& x) {
    if (x < 0) throw std::invalid_argument("ceil_sqrt of a negative number");
    mpz_class s = sqrt(x); // floor square root
    if (s * s < x) ++s;
    return s;
}

namespace {

// Squared Euclidean norms of all columns.
std::vector<mpz_class> column_norms_sq(const IntegerMatrix& a) {
    std::vector<mpz_class> norms(a.n(), 0);
    for (int j = 0; j < a.n(); ++j)
        for (int i = 0; i < a.n(); ++i)
            norms[j] += a(i, j) * a(i, j);
    return norms;
}

} // namespace

mpz_class hadamard_bound(const IntegerMatrix& a) {
    mpz_class prod = 1;
    for (const mpz_class& s : column_norms_sq(a)) {
        if (s == 0) return 0;
        prod *= s;
    }
    return ceil_sqrt(prod);
}

BoundPair solution_bounds(const IntegerMatrix& a, const IntegerVector& v) {
    if (static_cast<int>(v.size()) != a.n())
        throw std::invalid_argument("vector dimension mismatch");

    const auto norms = column_norms_sq(a);
    int jmin = 0;
    for (int j = 1; j < a.n(); ++j)
        if (norms[j] < norms[jmin]) jmin = j;

    mpz_class vnorm = 0;
    for (const mpz_class& e : v) vnorm += e * e;

    mpz_class num_sq = vnorm;
    mpz_class den_sq = 1;
    for (int j = 0; j < a.n(); ++j) {
        den_sq *= norms[j];
        if (j != jmin) num_sq *= norms[j];
    }

    BoundPair b{ceil_sqrt(num_sq), ceil_sqrt(den_sq)};
    if (b.numerator_bound < 1) b.numerator_bound = 1;
    if (b.denominator_bound < 1) b.denominator_bound = 1;
    return b;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
    IntegerMatrix t(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            t(j, i) = a(i, j);
    return t;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matrix dimension mismatch");
    IntegerMatrix c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int k = 0; k < a.n(); ++k) {
            const mpz_class& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntegerVector multiply(const IntegerMatrix& a, const IntegerVector& v) {
    if (static_cast<int>(v.size()) != a.n())
        throw std::invalid_argument("vector dimension mismatch");
    IntegerVector out(a.n(), 0);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

mpz_class max_abs_entry(const IntegerMatrix& a) {
    mpz_class m = 0;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            mpz_class e = abs(a(i, j));
            if (e > m) m = e;
        }
    return m;
}

} // namespace zdet
