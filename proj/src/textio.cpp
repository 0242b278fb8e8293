#include "rankcode/textio.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>

namespace rankcode {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Sym> parse_digit_row(const std::string& line, unsigned q, std::size_t expect) {
    std::vector<Sym> row;
    if (line.find(' ') != std::string::npos || q > 10) {
        std::istringstream is(line);
        long v;
        while (is >> v) {
            if (v < 0 || unsigned(v) >= q) throw std::runtime_error("digit out of range");
            row.push_back(Sym(v));
        }
    } else {
        for (char c : line) {
            if (c == '\r') continue;
            if (c < '0' || c > '9') throw std::runtime_error("invalid digit character");
            unsigned v = unsigned(c - '0');
            if (v >= q) throw std::runtime_error("digit out of range");
            row.push_back(Sym(v));
        }
    }
    if (row.size() != expect) throw std::runtime_error("row has wrong length");
    return row;
}

void append_digit_row(std::ostringstream& os, const MatQ& x, std::size_t i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
        if (x.q() > 10 && j) os << ' ';
        os << unsigned(x.at(i, j));
    }
    os << '\n';
}

std::uint64_t parse_uint(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty number");
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw std::runtime_error("trailing characters in number");
    return v;
}

}  // namespace

std::string ext_to_hex(const Field& f, const Ext& a) {
    BigInt v = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) v = v * f.q() + a.c[i];
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

Ext ext_from_hex(const Field& f, const std::string& s) {
    BigInt v;
    std::istringstream is(s);
    is >> std::hex >> v;
    if (is.fail()) throw std::runtime_error("invalid hex element");
    Ext a = f.zero();
    for (unsigned i = 0; i < f.m(); ++i) {
        a.c[i] = Sym((v % f.q()).convert_to<unsigned>());
        v /= f.q();
    }
    if (v != 0) throw std::runtime_error("hex element out of field range");
    return a;
}

std::string format_codeword_hex(const Field& f, const std::vector<Ext>& v) {
    std::ostringstream os;
    for (const Ext& a : v) os << ext_to_hex(f, a) << '\n';
    return os.str();
}

std::vector<Ext> parse_codeword_hex(const Field& f, const std::string& text) {
    std::vector<Ext> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(ext_from_hex(f, line));
    }
    return out;
}

std::string format_matq(const MatQ& x) {
    std::ostringstream os;
    os << x.q() << ' ' << x.rows() << ' ' << x.cols() << '\n';
    for (std::size_t i = 0; i < x.rows(); ++i) append_digit_row(os, x, i);
    return os.str();
}

MatQ parse_matq(const std::string& text) {
    std::istringstream is(text);
    unsigned q;
    std::size_t rows, cols;
    if (!(is >> q >> rows >> cols)) throw std::runtime_error("bad matrix header");
    std::string line;
    std::getline(is, line);  // rest of header line
    MatQ x(q, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("matrix truncated");
        auto row = parse_digit_row(line, q, cols);
        for (std::size_t j = 0; j < cols; ++j) x.at(i, j) = row[j];
    }
    return x;
}

std::string format_packets(const MatQ& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.rows(); ++i) append_digit_row(os, x, i);
    return os.str();
}

MatQ parse_packets(const std::string& text, unsigned q, std::size_t M) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<Sym>> rows;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(parse_digit_row(line, q, M));
    }
    if (rows.empty()) throw std::runtime_error("no packets in input");
    MatQ x(q, rows.size(), M);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < M; ++j) x.at(i, j) = rows[i][j];
    return x;
}

namespace {

struct SpecFields {
    unsigned q = 0, m = 0, n = 0, k = 0;
    bool has_poly = false;
    std::vector<Sym> poly;
};

SpecFields parse_fields(const std::string& body) {
    SpecFields out;
    std::string poly_hex;
    for (const std::string& part : split(body, ',')) {
        const auto kv = split(part, '=');
        if (kv.size() != 2) throw std::runtime_error("expected key=value in spec: " + part);
        const std::string& key = kv[0];
        if (key == "q")
            out.q = unsigned(parse_uint(kv[1]));
        else if (key == "m")
            out.m = unsigned(parse_uint(kv[1]));
        else if (key == "n")
            out.n = unsigned(parse_uint(kv[1]));
        else if (key == "k")
            out.k = unsigned(parse_uint(kv[1]));
        else if (key == "poly")
            poly_hex = kv[1];
        else
            throw std::runtime_error("unknown spec key: " + key);
    }
    if (out.q == 0 || out.m == 0) throw std::runtime_error("spec must provide q and m");
    if (!poly_hex.empty()) {
        BigInt v;
        std::istringstream is(poly_hex);
        if (poly_hex.rfind("0x", 0) == 0 || poly_hex.rfind("0X", 0) == 0) {
            std::istringstream hs(poly_hex.substr(2));
            hs >> std::hex >> v;
            if (hs.fail()) throw std::runtime_error("bad poly value");
        } else {
            is >> v;
            if (is.fail()) throw std::runtime_error("bad poly value");
        }
        out.has_poly = true;
        out.poly.assign(out.m + 1, 0);
        for (unsigned i = 0; i <= out.m; ++i) {
            out.poly[i] = Sym((v % out.q).convert_to<unsigned>());
            v /= out.q;
        }
        if (v != 0) throw std::runtime_error("poly degree exceeds m");
    }
    return out;
}

}  // namespace

Field::Ptr parse_field_spec(const std::string& spec) {
    try {
        SpecFields s = parse_fields(spec);
        return s.has_poly ? Field::make(s.q, s.m, s.poly) : Field::make(s.q, s.m);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad field spec: ") + e.what());
    }
}

GabidulinCode parse_code_spec(const std::string& spec) {
    try {
        if (spec.rfind("gab:", 0) != 0) throw std::runtime_error("code spec must start with 'gab:'");
        SpecFields s = parse_fields(spec.substr(4));
        if (s.n == 0 || s.k == 0) throw std::runtime_error("code spec must provide n and k");
        Field::Ptr f = s.has_poly ? Field::make(s.q, s.m, s.poly) : Field::make(s.q, s.m);
        return GabidulinCode::make(f, s.n, s.k);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad code spec: ") + e.what());
    }
}

}  // namespace rankcode
