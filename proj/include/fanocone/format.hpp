#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "fanocone/chern.hpp"
#include "fanocone/errors.hpp"
#include "fanocone/grassmannian.hpp"
#include "fanocone/numeric.hpp"
#include "fanocone/partition.hpp"

namespace fanocone {

// Class syntax: a signed sum of terms `[coeff]s<parts>` with no spaces,
// e.g. "s31", "-s2+2s11", "1/2s2-1/2s11".  Single-digit parts are written
// as bare digits (s31 = sigma_{3,1}); larger parts use brackets (s[10,3]).
// "s0" is the class of the empty partition.

namespace detail {

inline Partition parse_partition_token(const std::string& tok, std::size_t& pos) {
    if (pos >= tok.size() || tok[pos] != 's')
        throw usage_error("expected 's' in class token '" + tok + "'");
    ++pos;
    std::vector<int> parts;
    if (pos < tok.size() && tok[pos] == '[') {
        ++pos;
        while (true) {
            std::size_t end = pos;
            while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
            if (end == pos) throw usage_error("malformed bracketed parts in '" + tok + "'");
            parts.push_back(std::stoi(tok.substr(pos, end - pos)));
            pos = end;
            if (pos < tok.size() && tok[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < tok.size() && tok[pos] == ']') {
                ++pos;
                break;
            }
            throw usage_error("unterminated bracketed parts in '" + tok + "'");
        }
    } else {
        std::size_t start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
            parts.push_back(tok[pos] - '0');
            ++pos;
        }
        if (pos == start) throw usage_error("missing parts after 's' in '" + tok + "'");
        if (parts.size() == 1 && parts[0] == 0) parts.clear();  // s0 = empty partition
    }
    try {
        return Partition(parts);
    } catch (const domain_error& e) {
        throw usage_error("invalid partition in '" + tok + "': " + e.what());
    }
}

}  // namespace detail

/// Parses a single partition index like "s31" or "s[10,3]".
inline Partition parse_schubert_index(const std::string& tok) {
    std::size_t pos = 0;
    Partition p = detail::parse_partition_token(tok, pos);
    if (pos != tok.size()) throw usage_error("trailing characters in class token '" + tok + "'");
    return p;
}

/// Parses a signed rational combination of Schubert classes; all terms must
/// have one codimension.
inline CohomologyClass parse_class(const GrassmannSpace& space, const std::string& tok) {
    if (tok.empty()) throw usage_error("empty class string");
    std::size_t pos = 0;
    std::vector<std::pair<Partition, Rat>> terms;
    while (pos < tok.size()) {
        int sign = 1;
        if (tok[pos] == '+') {
            ++pos;
        } else if (tok[pos] == '-') {
            sign = -1;
            ++pos;
        }
        // optional coefficient: digits [ '/' digits ]
        Int num = 1, den = 1;
        std::size_t d0 = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos > d0) {
            num = Int(tok.substr(d0, pos - d0));
            if (pos < tok.size() && tok[pos] == '/') {
                ++pos;
                std::size_t n0 = pos;
                while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
                    ++pos;
                if (pos == n0) throw usage_error("malformed coefficient in '" + tok + "'");
                den = Int(tok.substr(n0, pos - n0));
            }
        }
        Partition p = detail::parse_partition_token(tok, pos);
        Rat coeff = make_rat(num, den);
        if (sign < 0) coeff = -coeff;
        terms.emplace_back(std::move(p), coeff);
    }
    if (terms.empty()) throw usage_error("no terms in class string '" + tok + "'");
    const int codim = terms.front().first.weight();
    for (const auto& [p, c] : terms)
        if (p.weight() != codim)
            throw domain_error("class '" + tok + "' mixes codimensions " +
                               std::to_string(codim) + " and " + std::to_string(p.weight()));
    CohomologyClass out(space, codim);
    for (const auto& [p, c] : terms) {
        if (!p.fits(space.box()))
            throw domain_error("index " + p.str() + " does not fit in " + space.label());
        out.add_term(p, c);
    }
    return out;
}

inline std::string partition_token(const Partition& p) {
    if (p.empty()) return "s0";
    bool small = true;
    for (int v : p.parts())
        if (v > 9) small = false;
    std::string out = "s";
    if (small) {
        for (int v : p.parts()) out += static_cast<char>('0' + v);
        return out;
    }
    out += '[';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    out += ']';
    return out;
}

/// Canonical round-trippable form, terms in lexicographically decreasing
/// index order, e.g. "-s2+2s11".
inline std::string class_to_string(const CohomologyClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, coeff] : c.coeffs()) {
        const bool negative = sgn(coeff) < 0;
        Rat mag = negative ? Rat(-coeff) : coeff;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        if (mag != 1) out += rat_str(mag);
        out += partition_token(p);
        first = false;
    }
    return out;
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& body, const std::string& context,
                                       bool allow_exponent) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = pos;
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
        if (end == pos) throw usage_error("malformed number in '" + context + "'");
        int value = std::stoi(body.substr(pos, end - pos));
        pos = end;
        int repeat = 1;
        if (allow_exponent && pos < body.size() && body[pos] == '^') {
            ++pos;
            end = pos;
            while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
            if (end == pos) throw usage_error("malformed exponent in '" + context + "'");
            repeat = std::stoi(body.substr(pos, end - pos));
            pos = end;
        }
        for (int i = 0; i < repeat; ++i) values.push_back(value);
        if (pos < body.size()) {
            if (body[pos] != ',') throw usage_error("expected ',' in '" + context + "'");
            ++pos;
        }
    }
    if (values.empty()) throw usage_error("empty number list in '" + context + "'");
    return values;
}

}  // namespace detail

/// Space syntax: G(r,s), OG(r,s), OG+(r,s), SG(r,s), P(n), P(w0,w1,...)
/// with 1^k exponent sugar in weight lists.
inline AmbientSpace parse_space(const std::string& tok) {
    const auto open = tok.find('(');
    if (open == std::string::npos || tok.back() != ')')
        throw usage_error("malformed space '" + tok + "'");
    const std::string head = tok.substr(0, open);
    const std::string body = tok.substr(open + 1, tok.size() - open - 2);
    const auto nums = detail::parse_int_list(body, tok, head == "P");
    try {
        if (head == "G") {
            if (nums.size() != 2) throw usage_error("G takes (r,s): '" + tok + "'");
            return AmbientSpace::grassmann(nums[0], nums[1]);
        }
        if (head == "OG" || head == "OG+") {
            if (nums.size() != 2) throw usage_error("OG takes (r,s): '" + tok + "'");
            return AmbientSpace::isotropic(IsotropicFamily::orthogonal, nums[0], nums[1],
                                           head == "OG+");
        }
        if (head == "SG") {
            if (nums.size() != 2) throw usage_error("SG takes (r,s): '" + tok + "'");
            return AmbientSpace::isotropic(IsotropicFamily::symplectic, nums[0], nums[1]);
        }
        if (head == "P") {
            if (nums.size() == 1) return AmbientSpace::projective(nums[0]);
            return AmbientSpace::weighted(nums);
        }
    } catch (const domain_error& e) {
        throw domain_error("space '" + tok + "': " + e.what());
    }
    throw usage_error("unknown space family '" + head + "' in '" + tok + "'");
}

/// CI syntax: <space>:(d1,d2,...), e.g. "G(2,5):(1,1)".
inline CIVariety parse_ci_spec(const std::string& tok) {
    const auto colon = tok.find(":(");
    if (colon == std::string::npos || tok.back() != ')')
        throw usage_error("malformed complete-intersection spec '" + tok +
                          "' (want <space>:(d1,d2,...))");
    AmbientSpace ambient = parse_space(tok.substr(0, colon));
    const std::string body = tok.substr(colon + 2, tok.size() - colon - 3);
    return CIVariety(std::move(ambient), detail::parse_int_list(body, tok, true));
}

inline std::vector<int> parse_degree_list(const std::string& tok) {
    return detail::parse_int_list(tok, tok, true);
}

}  // namespace fanocone
