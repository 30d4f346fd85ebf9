#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "properties.hpp"

namespace cbg {

// One letter of a relator word: a generator index (1-based) with sign.
struct Letter {
    int generator;
    int exponent;  // +1 or -1

    bool operator==(const Letter& o) const {
        return generator == o.generator && exponent == o.exponent;
    }
};

namespace detail {

// Cancel adjacent inverse pairs until none remain.
inline std::vector<Letter> free_reduce(const std::vector<Letter>& word) {
    std::vector<Letter> out;
    for (const Letter& l : word) {
        if (!out.empty() && out.back().generator == l.generator &&
            out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

}  // namespace detail

// A finite group presentation: named generators and freely reduced relator
// words.  Relators that reduce to the empty word are dropped (recorded as
// warnings when parsed from text).
class Presentation {
  public:
    Presentation(std::vector<std::string> generator_names,
                 const std::vector<std::vector<Letter>>& relator_words)
        : generators_(std::move(generator_names)) {
        if (generators_.empty()) throw std::invalid_argument("empty generator list");
        for (std::size_t i = 0; i < generators_.size(); ++i)
            for (std::size_t j = i + 1; j < generators_.size(); ++j)
                if (generators_[i] == generators_[j])
                    throw std::invalid_argument("duplicate generator name " + generators_[i]);
        for (const auto& word : relator_words) {
            for (const Letter& l : word) {
                if (l.generator < 1 || l.generator > generator_count())
                    throw std::invalid_argument("letter references undeclared generator");
                if (l.exponent != 1 && l.exponent != -1)
                    throw std::invalid_argument("letter exponent must be +1 or -1");
            }
            auto reduced = detail::free_reduce(word);
            if (!reduced.empty()) relators_.push_back(std::move(reduced));
        }
    }

    int generator_count() const { return static_cast<int>(generators_.size()); }
    const std::vector<std::string>& generators() const { return generators_; }
    int relator_count() const { return static_cast<int>(relators_.size()); }
    const std::vector<std::vector<Letter>>& relators() const { return relators_; }

    const std::string& generator_name(int i) const {
        if (i < 1 || i > generator_count()) throw std::out_of_range("generator index");
        return generators_[i - 1];
    }

  private:
    std::vector<std::string> generators_;
    std::vector<std::vector<Letter>> relators_;
};

// Text grammar: a "gens: name name ..." statement followed by
// "rel: <word> [= <word>]" statements, separated by newlines or semicolons.
// Words concatenate generator names, each optionally followed by ^-1, with
// whitespace allowed anywhere between letters; "u = v" means the relator
// u v^-1.  Generator names are matched greedily, longest first.
struct ParsedPresentation {
    Presentation presentation;
    std::vector<std::string> warnings;  // one entry per relator dropped as trivial
};

inline ParsedPresentation parse_presentation(const std::string& text) {
    // Split into statements on newlines and semicolons.
    std::vector<std::string> statements;
    std::string current;
    for (char ch : text) {
        if (ch == '\n' || ch == ';') {
            statements.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    statements.push_back(current);

    auto trim = [](const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };

    std::vector<std::string> names;
    bool have_gens = false;
    // Generator name -> 1-based index, tried longest name first.
    std::vector<int> by_length;  // indices into names, sorted by descending length

    auto tokenize_word = [&](const std::string& word) {
        std::vector<Letter> letters;
        std::size_t pos = 0;
        while (pos < word.size()) {
            if (std::isspace(static_cast<unsigned char>(word[pos]))) {
                ++pos;
                continue;
            }
            int matched = 0;
            for (int idx : by_length) {
                const std::string& name = names[idx - 1];
                if (word.compare(pos, name.size(), name) == 0) {
                    matched = idx;
                    pos += name.size();
                    break;
                }
            }
            if (matched == 0)
                throw ParseError("unknown token at \"" + word.substr(pos, 8) + "\"");
            int exponent = 1;
            if (pos < word.size() && word[pos] == '^') {
                if (word.compare(pos, 3, "^-1") != 0)
                    throw ParseError("malformed exponent after " + names[matched - 1] +
                                     " (only ^-1 is allowed)");
                exponent = -1;
                pos += 3;
            }
            letters.push_back(Letter{matched, exponent});
        }
        return letters;
    };

    std::vector<std::vector<Letter>> relator_words;
    std::vector<int> relator_statement;  // statement number for warnings
    int statement_no = 0;
    for (const auto& raw : statements) {
        ++statement_no;
        std::string stmt = trim(raw);
        if (stmt.empty()) continue;
        if (stmt.rfind("gens:", 0) == 0) {
            if (have_gens) throw ParseError("more than one generator declaration");
            have_gens = true;
            std::string rest = stmt.substr(5);
            std::string name;
            for (char ch : rest + " ") {
                if (std::isspace(static_cast<unsigned char>(ch))) {
                    if (!name.empty()) names.push_back(name);
                    name.clear();
                } else {
                    name.push_back(ch);
                }
            }
            if (names.empty()) throw ParseError("empty generator list");
            for (std::size_t i = 0; i < names.size(); ++i)
                for (std::size_t j = i + 1; j < names.size(); ++j)
                    if (names[i] == names[j])
                        throw ParseError("duplicate generator name " + names[i]);
            by_length.resize(names.size());
            for (std::size_t i = 0; i < names.size(); ++i) by_length[i] = static_cast<int>(i) + 1;
            std::sort(by_length.begin(), by_length.end(), [&](int a, int b) {
                if (names[a - 1].size() != names[b - 1].size())
                    return names[a - 1].size() > names[b - 1].size();
                return a < b;
            });
        } else if (stmt.rfind("rel:", 0) == 0) {
            if (!have_gens) throw ParseError("relator before generator declaration");
            std::string rest = stmt.substr(4);
            std::size_t eq = rest.find('=');
            std::vector<Letter> word;
            if (eq == std::string::npos) {
                word = tokenize_word(rest);
            } else {
                if (rest.find('=', eq + 1) != std::string::npos)
                    throw ParseError("more than one '=' in a relator");
                word = tokenize_word(rest.substr(0, eq));
                std::vector<Letter> right = tokenize_word(rest.substr(eq + 1));
                for (auto it = right.rbegin(); it != right.rend(); ++it)
                    word.push_back(Letter{it->generator, -it->exponent});
            }
            relator_words.push_back(std::move(word));
            relator_statement.push_back(statement_no);
        } else {
            throw ParseError("unknown statement \"" + stmt.substr(0, 12) + "\"");
        }
    }
    if (!have_gens) throw ParseError("missing generator declaration");

    std::vector<std::string> warnings;
    std::vector<std::vector<Letter>> kept;
    for (std::size_t i = 0; i < relator_words.size(); ++i) {
        if (detail::free_reduce(relator_words[i]).empty())
            warnings.push_back("relator in statement " +
                               std::to_string(relator_statement[i]) +
                               " reduces to the empty word; dropped");
        else
            kept.push_back(relator_words[i]);
    }
    return ParsedPresentation{Presentation(names, kept), std::move(warnings)};
}

// The standard graph-group presentation: one generator per vertex, one
// commutator relator per edge.
inline Presentation standard_raag_presentation(const SimpleGraph& g) {
    std::vector<std::string> names;
    for (int v = 1; v <= g.vertex_count(); ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::vector<Letter>> relators;
    for (const auto& [i, j] : g.edges())
        relators.push_back({Letter{i, 1}, Letter{j, 1}, Letter{i, -1}, Letter{j, -1}});
    return Presentation(std::move(names), relators);
}

// A degree-1 class with trivial coefficients: one field value per generator,
// vanishing on the abelianization of every relator.
struct Cocycle {
    PrimeField field;
    std::vector<std::uint32_t> values;  // values[i-1] = value on generator i

    std::uint32_t on_generator(int i) const {
        if (i < 1 || i > static_cast<int>(values.size()))
            throw std::out_of_range("generator index outside cocycle");
        return values[i - 1];
    }

    bool operator==(const Cocycle& o) const {
        return field == o.field && values == o.values;
    }
};

namespace detail {

// Exponent-sum matrix: one row per relator, one column per generator.
inline PrimeFieldMatrix exponent_matrix(const Presentation& p, const PrimeField& f) {
    PrimeFieldMatrix m(p.relator_count(), p.generator_count(), f);
    for (int r = 1; r <= p.relator_count(); ++r)
        for (const Letter& l : p.relators()[r - 1])
            m.set(r, l.generator,
                  static_cast<std::int64_t>(m.at(r, l.generator)) + l.exponent);
    return m;
}

// Row-reduce in place; returns the pivot column (or 0) of each row.
inline std::vector<int> row_reduce(PrimeFieldMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<int> pivot_col(m.rows() + 1, 0);
    int row = 1;
    for (int col = 1; col <= m.cols() && row <= m.rows(); ++col) {
        int pivot = 0;
        for (int r = row; r <= m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == 0) continue;
        for (int c = 1; c <= m.cols(); ++c) {
            auto t = m.at(row, c);
            m.set(row, c, m.at(pivot, c));
            m.set(pivot, c, t);
        }
        std::uint32_t scale = f.inv(m.at(row, col));
        for (int c = 1; c <= m.cols(); ++c) m.set(row, c, f.mul(scale, m.at(row, c)));
        for (int r = 1; r <= m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            std::uint32_t factor = m.at(r, col);
            for (int c = 1; c <= m.cols(); ++c)
                m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(row, c))));
        }
        pivot_col[row] = col;
        ++row;
    }
    return pivot_col;
}

inline void check_cocycle(const Presentation& p, const Cocycle& c, const char* which) {
    if (static_cast<int>(c.values.size()) != p.generator_count())
        throw std::invalid_argument(std::string(which) +
                                    " cocycle length differs from generator count");
    for (std::uint32_t v : c.values)
        if (v >= c.field.modulus())
            throw std::invalid_argument(std::string(which) + " cocycle entry not reduced mod p");
    const PrimeField& f = c.field;
    for (int r = 1; r <= p.relator_count(); ++r) {
        std::uint32_t sum = 0;
        for (const Letter& l : p.relators()[r - 1]) {
            std::uint32_t v = c.values[l.generator - 1];
            sum = l.exponent > 0 ? f.add(sum, v) : f.sub(sum, v);
        }
        if (sum != 0)
            throw InvariantViolation(std::string(which) +
                                     " input does not vanish on abelianized relator " +
                                     std::to_string(r));
    }
}

}  // namespace detail

// Echelon-form basis of the functionals on generators that vanish on every
// abelianized relator; the dimension is generators minus the rank of the
// exponent-sum matrix.
inline std::vector<Cocycle> h1_basis(const Presentation& p, const PrimeField& f) {
    int n = p.generator_count();
    PrimeFieldMatrix m = detail::exponent_matrix(p, f);
    std::vector<int> pivot_col = detail::row_reduce(m);
    std::vector<char> is_pivot(n + 1, 0);
    int nrows = 0;
    for (int r = 1; r <= m.rows(); ++r)
        if (pivot_col[r] != 0) {
            is_pivot[pivot_col[r]] = 1;
            ++nrows;
        }
    std::vector<Cocycle> basis;
    for (int j = 1; j <= n; ++j) {
        if (is_pivot[j]) continue;
        Cocycle c{f, std::vector<std::uint32_t>(n, 0)};
        c.values[j - 1] = 1;
        for (int r = 1; r <= nrows; ++r)
            if (pivot_col[r] != 0) c.values[pivot_col[r] - 1] = f.neg(m.at(r, j));
        basis.push_back(std::move(c));
    }
    return basis;
}

// Evaluates the product of two degree-1 classes on each relator 2-cell.  For
// a relator y_1...y_t the value is the sum over letters of
// f(y_1...y_{s-1}) g(y_s) for positive letters and -f(y_1...y_s) g(x) for
// negative letters y_s = x^-1; f extends additively over words.  The
// negative-letter form carries the correction that makes inverse letters
// behave as formal negatives, so the value is invariant under free
// reduction and alternating on commutators.
inline std::vector<std::uint32_t> cup_eval(const Presentation& p, const Cocycle& f,
                                           const Cocycle& g) {
    if (!(f.field == g.field))
        throw std::invalid_argument("cocycles live over different fields");
    detail::check_cocycle(p, f, "left");
    detail::check_cocycle(p, g, "right");
    const PrimeField& field = f.field;
    std::vector<std::uint32_t> out;
    out.reserve(p.relators().size());
    for (const auto& word : p.relators()) {
        std::uint32_t value = 0;
        std::uint32_t prefix = 0;  // f of the word read so far
        for (const Letter& l : word) {
            std::uint32_t fv = f.values[l.generator - 1];
            std::uint32_t gv = g.values[l.generator - 1];
            if (l.exponent > 0) {
                value = field.add(value, field.mul(prefix, gv));
                prefix = field.add(prefix, fv);
            } else {
                prefix = field.sub(prefix, fv);
                value = field.sub(value, field.mul(prefix, gv));
            }
        }
        out.push_back(value);
    }
    return out;
}

// True when the product of f and g evaluates to zero on every 2-cycle of
// the presentation complex, i.e. the evaluation vector lies in the span of
// the coboundaries (the columns of the exponent-sum matrix).
inline bool cup_vanishes(const Presentation& p, const Cocycle& f, const Cocycle& g,
                         const PrimeField& field) {
    if (!(f.field == field) || !(g.field == field))
        throw std::invalid_argument("cocycle field differs from requested field");
    std::vector<std::uint32_t> eval = cup_eval(p, f, g);
    int rows = p.relator_count();
    if (rows == 0) return true;
    int n = p.generator_count();
    PrimeFieldMatrix m(rows, n + 1, field);
    PrimeFieldMatrix base = detail::exponent_matrix(p, field);
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= n; ++c) m.set(r, c, base.at(r, c));
        m.set(r, n + 1, eval[r - 1]);
    }
    return rank(m) == rank(base);
}

// The cohomology basis graph computed from a presentation: one vertex per
// element of the echelon H1 basis, an edge exactly where the product does
// not vanish.
struct PresentationBasisGraph {
    SimpleGraph graph;
    std::vector<Cocycle> basis;
};

inline PresentationBasisGraph presentation_basis_graph(const Presentation& p,
                                                       const PrimeField& field) {
    std::vector<Cocycle> basis = h1_basis(p, field);
    int d = static_cast<int>(basis.size());
    SimpleGraph g(d);
    for (int r = 1; r <= d; ++r)
        for (int s = r + 1; s <= d; ++s)
            if (!cup_vanishes(p, basis[r - 1], basis[s - 1], field)) g.add_edge(r, s);
    return PresentationBasisGraph{std::move(g), std::move(basis)};
}

// One-directional property evidence from a presentation: if the group is a
// graph group, the defining graph embeds into the computed basis graph, and
// the properties below are minor-closed, so a positive verdict transfers to
// the defining graph.  A negative verdict on this single basis certifies
// nothing.
struct PropertyCertificate {
    std::string property;
    SimpleGraph basis_graph;
    bool verdict;
    std::string statement;
};

inline PropertyCertificate certify_property(const Presentation& p, const std::string& property,
                                            const PrimeField& field) {
    PresentationBasisGraph pb = presentation_basis_graph(p, field);
    bool verdict;
    if (property == "empty")
        verdict = is_empty_graph(pb.graph);
    else if (property == "linear-forest")
        verdict = is_linear_forest(pb.graph);
    else if (property == "outerplanar")
        verdict = is_outerplanar(pb.graph);
    else if (property == "planar")
        verdict = is_planar_graph(pb.graph);
    else if (property == "linkless")
        verdict = is_linkless(pb.graph);
    else
        throw std::invalid_argument("unknown property \"" + property +
                                    "\" (expected empty, linear-forest, outerplanar, planar, "
                                    "or linkless)");
    std::string statement =
        verdict ? "defining graph is " + property
                : "inconclusive for upper bound; this basis graph is non-" + property;
    return PropertyCertificate{property, std::move(pb.graph), verdict, std::move(statement)};
}

}  // namespace cbg
