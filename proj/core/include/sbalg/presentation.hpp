#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbalg {

enum class LetterClass { Alpha, Beta };

std::string_view letter_class_name(LetterClass c);

struct Arrow {
    std::string name;
    std::string source;
    std::string target;
    LetterClass letter = LetterClass::Alpha;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A path is a list of arrow names in the order they are applied: {x, y}
// means "first x, then y" (written y x in composition notation).
using PathWord = std::vector<std::string>;

struct Relation {
    enum class Kind { Zero, Equal };
    Kind kind = Kind::Zero;
    PathWord left;
    PathWord right;  // empty for Zero

    static Relation zero(PathWord p) { return {Kind::Zero, std::move(p), {}}; }
    static Relation equal(PathWord p, PathWord q) { return {Kind::Equal, std::move(p), std::move(q)}; }

    friend bool operator==(const Relation&, const Relation&) = default;
    friend auto operator<=>(const Relation&, const Relation&) = default;
};

class PresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quiver with relations. Construction validates and canonicalizes: vertices
// and arrows are sorted by name, relations are sorted and deduplicated.
class Presentation {
public:
    Presentation(std::string name, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                 std::vector<Relation> relations);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    std::optional<std::size_t> find_vertex(std::string_view v) const;
    std::optional<std::size_t> find_arrow(std::string_view a) const;
    std::size_t vertex_index(std::string_view v) const;  // throws PresentationError
    std::size_t arrow_index(std::string_view a) const;   // throws PresentationError

    std::size_t source(std::size_t arrow) const { return src_[arrow]; }
    std::size_t target(std::size_t arrow) const { return tgt_[arrow]; }
    const std::vector<std::size_t>& arrows_from(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& arrows_into(std::size_t v) const { return in_[v]; }

    // Arrow indices of a word, in application order; throws on unknown names.
    std::vector<std::size_t> resolve(const PathWord& w) const;

    // At most one alpha and one beta arrow start and end at each vertex, and
    // every composable alpha/beta mixture is a zero relation.
    bool is_special_biserial() const;

    friend bool operator==(const Presentation& a, const Presentation& b)
    {
        return a.name_ == b.name_ && a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_ &&
               a.relations_ == b.relations_;
    }

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::map<std::string, std::size_t, std::less<>> vertex_ids_;
    std::map<std::string, std::size_t, std::less<>> arrow_ids_;
    std::vector<std::size_t> src_, tgt_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

// Incremental construction by name.
class PresentationBuilder {
public:
    explicit PresentationBuilder(std::string name) : name_(std::move(name)) {}
    PresentationBuilder& vertex(std::string v);
    PresentationBuilder& arrow(std::string name, LetterClass c, std::string src, std::string tgt);
    PresentationBuilder& zero(PathWord p);
    PresentationBuilder& equal(PathWord p, PathWord q);
    Presentation build() const;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_, column_;
    std::string message_;
};

Presentation parse_presentation(std::string_view text);
std::string emit_presentation(const Presentation& p);

// Keeps the listed vertices with every arrow between them. Relations whose
// paths leave the kept vertices are dropped, or become zero relations when
// only one side of an equality survives.
Presentation full_subpresentation(const Presentation& p, const std::vector<std::string>& keep,
                                  std::string name);

// The family of special biserial algebras indexed by the length r >= 1 of the
// d-chain and the level m >= 0. Vertex names: a0.., b0.., c0..c2, bm1, cm1 for
// level -1, u, v, w, d0..dr. Arrow names are alpha_<source>, beta_<source>.
Presentation lambda_presentation(int r, int m);
// Level-2 algebra with a2 and b2 removed.
Presentation lambda1prime_presentation(int r);
// The six vertices whose full subquiver in the level-2 algebra is of type A6.
std::vector<std::string> subquiver_u();
std::vector<std::string> lambda_vertices(int r, int m);

// ---------------------------------------------------------------------------
// Basis of the quotient of the path algebra by the relations.

class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(PathWord path, std::size_t bound);
    const PathWord& path() const { return path_; }

private:
    PathWord path_;
};

struct PathClass {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> path;  // shortest, lexicographically least representative
};

class PathBasis {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t dimension() const { return classes_.size(); }
    const std::vector<PathClass>& classes() const { return classes_; }
    const PathClass& at(std::size_t c) const { return classes_[c]; }
    // Classes of paths starting at vertex x, identity first.
    const std::vector<std::size_t>& classes_from(std::size_t x) const { return from_[x]; }
    std::vector<std::size_t> classes_between(std::size_t x, std::size_t y) const;
    std::size_t identity(std::size_t x) const { return from_[x].front(); }

    // Class of (path c, then arrow a), or npos when zero or not composable.
    std::size_t act(std::size_t arrow, std::size_t c) const { return act_[arrow * classes_.size() + c]; }
    // Class of an arbitrary path in application order, npos when zero.
    std::size_t class_of(const std::vector<std::size_t>& path) const;

private:
    friend PathBasis build_path_basis(const Presentation&, std::size_t);
    std::vector<PathClass> classes_;
    std::vector<std::vector<std::size_t>> from_;
    std::vector<std::size_t> act_;
    std::map<std::vector<std::size_t>, std::size_t> lookup_;  // monomially nonzero path -> class or npos
};

PathBasis build_path_basis(const Presentation& p, std::size_t length_bound = 64);

class Algebra {
public:
    Algebra(Presentation p, std::size_t length_bound);
    const Presentation& presentation() const { return pres_; }
    const PathBasis& basis() const { return basis_; }
    const std::string& name() const { return pres_.name(); }
    std::size_t vertex_count() const { return pres_.vertex_count(); }

private:
    Presentation pres_;
    PathBasis basis_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(Presentation p, std::size_t length_bound = 64);
AlgebraPtr lambda_algebra(int r, int m);
AlgebraPtr lambda1prime_algebra(int r);

}  // namespace sbalg
