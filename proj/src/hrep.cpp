#include "polydiam/hrep.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace polydiam {

namespace {

std::string scale_invariant_key(const RVector& normal, const Rational& offset) {
    // Divide by |first nonzero normal entry| so positive multiples collide.
    int lead = -1;
    for (int j = 0; j < normal.size(); ++j) {
        if (normal(j) != 0) {
            lead = j;
            break;
        }
    }
    Rational scale = abs(normal(lead));
    std::ostringstream key;
    for (int j = 0; j < normal.size(); ++j) key << Rational(normal(j) / scale).str() << ' ';
    key << Rational(offset / scale).str();
    return key.str();
}

}  // namespace

HPolyhedron::HPolyhedron(RMatrix normals, RVector offsets, std::vector<std::string> labels)
    : normals_(std::move(normals)), offsets_(std::move(offsets)), labels_(std::move(labels)) {
    const int n = static_cast<int>(normals_.rows());
    const int d = static_cast<int>(normals_.cols());
    if (n < 1 || d < 1) throw std::invalid_argument("polyhedron needs n >= 1 constraints and d >= 1 variables");
    if (offsets_.size() != n) throw std::invalid_argument("offset count does not match constraint count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match constraint count");

    std::unordered_set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (normals_.row(i).isZero()) throw std::invalid_argument("row " + std::to_string(i) + " has a zero normal");
        if (!seen.insert(row_key(i)).second)
            throw std::invalid_argument("row " + std::to_string(i) + " duplicates an earlier constraint");
    }
}

bool HPolyhedron::contains(const RVector& x) const {
    for (int i = 0; i < num_constraints(); ++i)
        if (normals_.row(i).dot(x.transpose()) > offsets_(i)) return false;
    return true;
}

bool HPolyhedron::tight(int row, const RVector& x) const {
    return normals_.row(row).dot(x.transpose()) == offsets_(row);
}

std::string HPolyhedron::row_key(int row) const {
    return scale_invariant_key(normal(row), offsets_(row));
}

RVector FacetCoordinateMap::lift(const RVector& facet_point) const {
    const int d = static_cast<int>(facet_normal.size());
    if (facet_point.size() != d - 1) throw std::invalid_argument("facet point has wrong dimension");
    RVector x(d);
    Rational acc = facet_offset;
    int k = 0;
    for (int j = 0; j < d; ++j) {
        if (j == eliminated) continue;
        x(j) = facet_point(k);
        acc -= facet_normal(j) * facet_point(k);
        ++k;
    }
    x(eliminated) = acc / facet_normal(eliminated);
    return x;
}

RVector FacetCoordinateMap::project(const RVector& ambient_point) const {
    const int d = static_cast<int>(facet_normal.size());
    if (ambient_point.size() != d) throw std::invalid_argument("ambient point has wrong dimension");
    RVector y(d - 1);
    int k = 0;
    for (int j = 0; j < d; ++j) {
        if (j == eliminated) continue;
        y(k++) = ambient_point(j);
    }
    return y;
}

HPolyhedron parse_hrep(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_content_line = [&](bool allow_comments) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream probe(line);
            std::string first;
            if (!(probe >> first)) continue;  // blank
            if (allow_comments && first[0] == '*') continue;
            return true;
        }
        return false;
    };

    auto trimmed = [&]() {
        std::istringstream probe(line);
        std::string tok, all;
        while (probe >> tok) {
            if (!all.empty()) all += ' ';
            all += tok;
        }
        return all;
    };

    if (!next_content_line(true) || trimmed() != "H-representation")
        throw ParseError(ParseErrorKind::MalformedHeader, line_no == 0 ? 1 : line_no,
                         "expected 'H-representation' header");
    if (!next_content_line(false) || trimmed() != "begin")
        throw ParseError(ParseErrorKind::MalformedHeader, line_no == 0 ? 1 : line_no, "expected 'begin'");
    if (!next_content_line(false))
        throw ParseError(ParseErrorKind::MalformedHeader, line_no, "missing dimension line");

    long n = 0, d_plus_1 = 0;
    std::string number_type;
    {
        std::istringstream dims(line);
        if (!(dims >> n >> d_plus_1 >> number_type) || number_type != "rational" || n < 1 || d_plus_1 < 2)
            throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                             "expected '<n> <d+1> rational' with n >= 1, d >= 1");
    }
    const int d = static_cast<int>(d_plus_1) - 1;

    RMatrix normals(n, d);
    RVector offsets(n);
    std::unordered_map<std::string, int> row_lines;
    for (long i = 0; i < n; ++i) {
        if (!next_content_line(false))
            throw ParseError(ParseErrorKind::WrongRowArity, line_no, "unexpected end of file inside body");
        std::istringstream row(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (row >> tok) tokens.push_back(tok);
        if (static_cast<int>(tokens.size()) != d + 1)
            throw ParseError(ParseErrorKind::WrongRowArity, line_no,
                             "row has " + std::to_string(tokens.size()) + " fields, expected " +
                                 std::to_string(d + 1));
        try {
            offsets(i) = parse_rational(tokens[0]);
            for (int j = 0; j < d; ++j) normals(i, j) = -parse_rational(tokens[j + 1]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ParseErrorKind::BadNumber, line_no, e.what());
        }
        if (normals.row(i).isZero())
            throw ParseError(ParseErrorKind::ZeroNormalRow, line_no, "row has a zero normal vector");
        std::string key = scale_invariant_key(normals.row(i).transpose(), offsets(i));
        auto [it, fresh] = row_lines.emplace(key, line_no);
        if (!fresh)
            throw ParseError(ParseErrorKind::DuplicateRow, line_no,
                             "row duplicates the constraint on line " + std::to_string(it->second));
    }
    if (!next_content_line(false) || trimmed() != "end")
        throw ParseError(ParseErrorKind::MalformedHeader, line_no == 0 ? 1 : line_no, "expected 'end'");

    return HPolyhedron(std::move(normals), std::move(offsets));
}

std::string serialize_hrep(const HPolyhedron& p) {
    std::ostringstream out;
    out << "H-representation\nbegin\n " << p.num_constraints() << ' ' << p.dim() + 1 << " rational\n";
    for (int i = 0; i < p.num_constraints(); ++i) {
        out << ' ' << format_rational(p.offset(i));
        for (int j = 0; j < p.dim(); ++j) out << ' ' << format_rational(-p.normals()(i, j));
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

FacetSubpolyhedron facet_subpolyhedron(const HPolyhedron& p, int facet) {
    const int n = p.num_constraints();
    const int d = p.dim();
    if (facet < 0 || facet >= n) throw std::invalid_argument("facet index out of range");
    if (d < 2) throw std::invalid_argument("facet subpolyhedron needs ambient dimension >= 2");

    // Eliminate the coordinate carrying the largest-magnitude coefficient.
    int elim = 0;
    for (int j = 1; j < d; ++j)
        if (abs(p.normals()(facet, j)) > abs(p.normals()(facet, elim))) elim = j;

    FacetCoordinateMap map;
    map.eliminated = elim;
    map.facet_normal = p.normal(facet);
    map.facet_offset = p.offset(facet);
    const Rational pivot = p.normals()(facet, elim);

    std::vector<RVector> sub_normals;
    std::vector<Rational> sub_offsets;
    std::vector<int> origin;
    std::unordered_set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        if (i == facet) continue;
        const Rational ratio = p.normals()(i, elim) / pivot;
        RVector nrm(d - 1);
        int k = 0;
        for (int j = 0; j < d; ++j) {
            if (j == elim) continue;
            nrm(k++) = p.normals()(i, j) - ratio * p.normals()(facet, j);
        }
        Rational off = p.offset(i) - ratio * p.offset(facet);
        if (nrm.isZero()) {
            if (off < 0)
                throw EmptyFacetError("facet " + std::to_string(facet) + " is empty: row " + std::to_string(i) +
                                      " reduces to 0 <= " + format_rational(off));
            continue;  // trivially true
        }
        if (!seen.insert(scale_invariant_key(nrm, off)).second) continue;  // duplicate, keep first
        sub_normals.push_back(std::move(nrm));
        sub_offsets.push_back(std::move(off));
        origin.push_back(i);
    }
    if (sub_normals.empty())
        throw std::invalid_argument("facet " + std::to_string(facet) +
                                    " leaves no constraints; the facet is a full affine subspace");

    RMatrix normals(static_cast<int>(sub_normals.size()), d - 1);
    RVector offsets(static_cast<int>(sub_normals.size()));
    for (int i = 0; i < static_cast<int>(sub_normals.size()); ++i) {
        normals.row(i) = sub_normals[i].transpose();
        offsets(i) = sub_offsets[i];
    }
    return FacetSubpolyhedron{HPolyhedron(std::move(normals), std::move(offsets)), std::move(map),
                              std::move(origin)};
}

}  // namespace polydiam
