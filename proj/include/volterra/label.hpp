#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace volterra {

// One factor of a vertex decoration: a named function, or a twist power +-1
// attached to a kernel index. Ordered by (kind, name); this is the canonical
// atom order used for label storage.
enum class AtomKind : std::uint8_t { Func = 0, Twist = 1, TwistInv = 2 };

struct Atom {
    AtomKind kind;
    std::string name;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Letters, digits, underscore; starts with a letter. ASCII only.
bool is_identifier(std::string_view s);

// "tau[w]", "tauinv[w]", or the bare function name.
std::string atom_text(const Atom& a);

// A canonical formal product of atoms; the empty product is the constant 1.
// Twist/TwistInv pairs over the same index cancel eagerly, so at most one of
// the two kinds is present per index. Atoms are kept sorted, which makes the
// default lexicographic comparison a total order on labels.
class Label {
public:
    Label() = default;

    static Label func(std::string name);
    static Label twist(std::string index);
    static Label twist_inv(std::string index);

    bool is_one() const noexcept { return atoms_.empty(); }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

    // Display form: twist atoms first, then function atoms, '*'-joined.
    // The empty label prints as "1".
    std::string text() const;

    friend Label operator*(const Label& a, const Label& b);
    friend auto operator<=>(const Label&, const Label&) = default;

private:
    explicit Label(std::vector<Atom> atoms) : atoms_(normalized(std::move(atoms))) {}
    static std::vector<Atom> normalized(std::vector<Atom> atoms);

    std::vector<Atom> atoms_;
};

} // namespace volterra
