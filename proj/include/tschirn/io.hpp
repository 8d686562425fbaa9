/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TSCHIRN_IO_HPP
#define TSCHIRN_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bivariate.hpp"
#include "bundle.hpp"
#include "cover.hpp"
#include "matrix.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

namespace tschirn {

/* key order is meaningful in reports, so the ordered flavor everywhere */
using Json = nlohmann::ordered_json;

template <class K>
std::string scalar_str(const K& c) {
    return c.str();
}

namespace detail {

template <class K>
int term_count(const Poly<K>& p) {
    int n = 0;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero()) ++n;
    return n;
}

inline std::string power_str(int e) {
    if (e == 1) return "x";
    return "x^" + std::to_string(e);
}

inline std::string ypower_str(int e) {
    if (e == 1) return "y";
    return "y^" + std::to_string(e);
}

/* splits "c" or "-c" so signs can be folded into +/- separators */
template <class K>
std::pair<bool, std::string> signed_scalar(const K& c) {
    std::string s = scalar_str(c);
    if (!s.empty() && s[0] == '-') return {true, scalar_str(-c)};
    return {false, std::move(s)};
}

}  // namespace detail

/* canonical form: terms by falling degree, " + " / " - " separators, "*"
   between coefficient and power; parses back to the same polynomial */
template <class K>
std::string poly_str(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const K c = p.coeff(k);
        if (c.is_zero()) continue;
        auto [neg, cs] = detail::signed_scalar(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") {
                out += cs;
                out += "*";
            }
            out += detail::power_str(k);
        }
    }
    return out;
}

/* Laurent-friendly form: a monomial over a power of x collapses to a
   single term with negative exponent, anything else stays num/den with
   parentheses around multi-term sides */
template <class K>
std::string rf_str(const RationalFunction<K>& f) {
    if (f.is_polynomial()) return poly_str(f.num());
    const Poly<K>& num = f.num();
    const Poly<K>& den = f.den();
    if (detail::term_count(den) == 1) {
        const int dk = den.degree();
        if (detail::term_count(num) == 1) {
            auto [neg, cs] = detail::signed_scalar(num.coeff(num.degree()));
            std::string out = neg ? "-" : "";
            if (cs != "1") {
                out += cs;
                out += "*";
            }
            return out + detail::power_str(num.degree() - dk);
        }
        return "(" + poly_str(num) + ")/" + detail::power_str(dk);
    }
    std::string ns = detail::term_count(num) == 1 ? poly_str(num) : "(" + poly_str(num) + ")";
    return ns + "/(" + poly_str(den) + ")";
}

/* plane-model form: y-terms by falling degree; one-term x-coefficients
   are inlined, longer ones parenthesized with the leading sign pulled out */
template <class K>
std::string bipoly_str(const BiPoly<K>& f) {
    if (f.ydeg() < 0) return "0";
    std::string out;
    for (int i = f.ydeg(); i >= 0; --i) {
        Poly<K> p = f.ycoeff(i);
        if (p.is_zero()) continue;
        bool neg = false;
        std::string body;
        if (detail::term_count(p) == 1) {
            const int j = p.degree();
            auto [n, cs] = detail::signed_scalar(p.coeff(j));
            neg = n;
            std::vector<std::string> parts;
            if (cs != "1" || (j == 0 && i == 0)) parts.push_back(cs);
            if (j > 0) parts.push_back(detail::power_str(j));
            if (i > 0) parts.push_back(detail::ypower_str(i));
            for (size_t k = 0; k < parts.size(); ++k) {
                if (k) body += "*";
                body += parts[k];
            }
        } else {
            if (detail::signed_scalar(p.coeff(p.degree())).first) {
                neg = true;
                p = -p;
            }
            body = "(" + poly_str(p) + ")";
            if (i > 0) body += "*" + detail::ypower_str(i);
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

template <class K>
Json rf_matrix_json(const Matrix<RationalFunction<K>>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rf_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class K>
Matrix<RationalFunction<K>> rf_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::domain_error("matrix must be a non-empty array of rows");
    const int r = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw std::domain_error("matrix rows must be non-empty arrays");
    const int c = static_cast<int>(j[0].size());
    Matrix<RationalFunction<K>> m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!j[static_cast<size_t>(i)].is_array() ||
            static_cast<int>(j[static_cast<size_t>(i)].size()) != c)
            throw std::domain_error("ragged matrix rows");
        for (int k = 0; k < c; ++k) {
            const Json& cell = j[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (!cell.is_string()) throw std::domain_error("matrix entries must be strings");
            m.at(i, k) = parse_ratfun<K>(cell.get<std::string>());
        }
    }
    return m;
}

inline Json type_to_json(const SplittingType& t) {
    Cohomology c = cohomology(t);
    return Json{{"type", t.parts()}, {"degree", t.degree()}, {"h0", c.h0}, {"h1", c.h1}};
}

template <class K>
Json bundle_to_json(const BundleLattice<K>& b) {
    return Json{{"rank", b.rank},
                {"finite", rf_matrix_json<K>(b.finite)},
                {"infinity", rf_matrix_json<K>(b.infinity)}};
}

template <class K>
BundleLattice<K> bundle_from_json(const Json& j) {
    for (const char* key : {"rank", "finite", "infinity"})
        if (!j.contains(key)) throw std::domain_error(std::string("bundle object needs \"") + key + "\"");
    BundleLattice<K> b;
    if (!j.at("rank").is_number_integer()) throw std::domain_error("bundle rank must be an integer");
    b.rank = j.at("rank").get<int>();
    b.finite = rf_matrix_from_json<K>(j.at("finite"));
    b.infinity = rf_matrix_from_json<K>(j.at("infinity"));
    validate_lattice(b);
    return b;
}

template <class K>
Json cover_to_json(const CoverAlgebra<K>& alg) {
    Json mult = Json::array();
    for (int i = 0; i < alg.degree; ++i) {
        Json row = Json::array();
        for (int j = 0; j < alg.degree; ++j) {
            Json cell = Json::array();
            for (int k = 0; k < alg.degree; ++k) cell.push_back(poly_str(alg.c(i, j, k)));
            row.push_back(std::move(cell));
        }
        mult.push_back(std::move(row));
    }
    return Json{{"d", alg.degree},
                {"char", K::characteristic()},
                {"mult", std::move(mult)},
                {"infinity", rf_matrix_json<K>(alg.infinity)},
                {"provenance", alg.provenance}};
}

template <class K>
CoverAlgebra<K> cover_from_json(const Json& j) {
    for (const char* key : {"d", "char", "mult", "infinity", "provenance"})
        if (!j.contains(key)) throw std::domain_error(std::string("cover object needs \"") + key + "\"");
    const long long file_char = j.at("char").get<long long>();
    if (file_char != K::characteristic())
        throw std::domain_error("characteristic mismatch: file says " + std::to_string(file_char));
    CoverAlgebra<K> alg;
    alg.degree = j.at("d").get<int>();
    if (alg.degree < 1) throw std::domain_error("cover degree must be positive");
    const size_t d = static_cast<size_t>(alg.degree);
    const Json& mult = j.at("mult");
    if (!mult.is_array() || mult.size() != d) throw std::domain_error("mult must be a d x d x d array");
    alg.mult.resize(d * d * d);
    for (size_t i = 0; i < d; ++i) {
        if (!mult[i].is_array() || mult[i].size() != d) throw std::domain_error("mult must be a d x d x d array");
        for (size_t jj = 0; jj < d; ++jj) {
            if (!mult[i][jj].is_array() || mult[i][jj].size() != d)
                throw std::domain_error("mult must be a d x d x d array");
            for (size_t k = 0; k < d; ++k) {
                if (!mult[i][jj][k].is_string()) throw std::domain_error("mult entries must be strings");
                alg.c(static_cast<int>(i), static_cast<int>(jj), static_cast<int>(k)) =
                    parse_poly<K>(mult[i][jj][k].get<std::string>());
            }
        }
    }
    alg.infinity = rf_matrix_from_json<K>(j.at("infinity"));
    alg.provenance = j.at("provenance").get<std::string>();
    validate_cover(alg);
    return alg;
}

template <class K>
Json plane_to_json(const BiPoly<K>& f) {
    return Json{{"f", bipoly_str(f)}};
}

template <class K>
using ParsedModel = std::variant<BiPoly<K>, CoverAlgebra<K>, BundleLattice<K>>;

/* one front door for every model the tools accept: a JSON object is a
   plane model, cover or bundle by its keys; bare text is a plane model */
template <class K>
ParsedModel<K> parse_model(const std::string& text) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
        }
        if (j.contains("f")) {
            if (!j.at("f").is_string()) throw std::domain_error("plane model \"f\" must be a string");
            BiPoly<K> f = parse_bipoly<K>(j.at("f").get<std::string>());
            if (f.ydeg() < 1 || !(f.ycoeff(f.ydeg()) == Poly<K>::one()))
                throw std::domain_error("plane model must be monic in y");
            return f;
        }
        if (j.contains("mult")) return cover_from_json<K>(j);
        if (j.contains("finite")) return bundle_from_json<K>(j);
        throw std::domain_error("model object needs \"f\", \"mult\" or \"finite\"");
    }
    BiPoly<K> f = parse_bipoly<K>(text);
    if (f.ydeg() < 1 || !(f.ycoeff(f.ydeg()) == Poly<K>::one()))
        throw std::domain_error("plane model must be monic in y");
    return f;
}

/* flat text rendering of a report: scalars one per line, arrays one
   element per line in compact JSON */
inline std::string render_text(const Json& data) {
    std::string out;
    for (auto it = data.begin(); it != data.end(); ++it) {
        if (it.value().is_array() && !it.value().empty()) {
            size_t i = 0;
            for (const Json& el : it.value())
                out += it.key() + "[" + std::to_string(i++) + "]: " + el.dump() + "\n";
        } else {
            out += it.key() + ": " + it.value().dump() + "\n";
        }
    }
    return out;
}

}  // namespace tschirn

#endif
