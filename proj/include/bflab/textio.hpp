#pragma once

// Text formats. Scalars: optional sign, decimal integer, optional "/" and a
// positive decimal integer. Point files: two whitespace-separated scalars per
// line. Lines beginning with '#' are comments. UTF-8, '\n' newlines.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bflab/plane.hpp"
#include "bflab/sets.hpp"

namespace bflab {

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

}  // namespace detail

inline ScalarSet read_scalar_set(std::istream& in) {
    std::vector<Scalar> items;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        for (const auto& tok : detail::tokenize(line)) {
            try {
                items.push_back(Scalar::parse(tok));
            } catch (const std::domain_error& e) {
                throw std::domain_error("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    return ScalarSet(std::move(items));
}

inline PointSet read_point_set(std::istream& in) {
    std::vector<Point> items;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_comment_or_blank(line)) continue;
        auto toks = detail::tokenize(line);
        if (toks.size() != 2)
            throw std::domain_error("line " + std::to_string(lineno) +
                                    ": expected two scalars per point");
        items.push_back(Point{Scalar::parse(toks[0]), Scalar::parse(toks[1])});
    }
    return PointSet(std::move(items));
}

inline void write_scalar_set(std::ostream& out, const ScalarSet& s) {
    for (const auto& x : s) out << x.str() << '\n';
}

inline void write_point_set(std::ostream& out, const PointSet& p) {
    for (const auto& q : p) out << q.x.str() << ' ' << q.y.str() << '\n';
}

// Form files: a kind tag ("symmetric" | "skew-symmetric" | "skew"), then the
// four matrix entries row-major.
inline BilinearForm read_form(std::istream& in) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        if (detail::is_comment_or_blank(line)) continue;
        for (auto& t : detail::tokenize(line)) toks.push_back(t);
    }
    if (toks.size() != 5)
        throw std::domain_error("form file: expected kind tag plus four scalars");
    FormKind kind;
    if (toks[0] == "symmetric")
        kind = FormKind::symmetric;
    else if (toks[0] == "skew-symmetric" || toks[0] == "skew")
        kind = FormKind::skew_symmetric;
    else
        throw std::domain_error("form file: unknown kind tag '" + toks[0] + "'");
    return BilinearForm(Scalar::parse(toks[1]), Scalar::parse(toks[2]),
                        Scalar::parse(toks[3]), Scalar::parse(toks[4]), kind);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::domain_error("cannot write file: " + path);
    out << content;
}

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Content hash of canonical serializations; embedded in reports.
inline std::string content_hash_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::string content_hash(const ScalarSet& s) {
    std::ostringstream ss;
    write_scalar_set(ss, s);
    return content_hash_hex(ss.str());
}

inline std::string content_hash(const PointSet& p) {
    std::ostringstream ss;
    write_point_set(ss, p);
    return content_hash_hex(ss.str());
}

}  // namespace bflab
