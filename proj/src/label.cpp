#include "volterra/label.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace volterra {

namespace {

bool ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ascii_word_char(char c) {
    return ascii_letter(c) || (c >= '0' && c <= '9') || c == '_';
}

void require_identifier(const std::string& s) {
    if (!is_identifier(s)) throw std::invalid_argument("not an identifier: '" + s + "'");
}

} // namespace

bool is_identifier(std::string_view s) {
    if (s.empty() || !ascii_letter(s.front())) return false;
    return std::all_of(s.begin(), s.end(), ascii_word_char);
}

std::string atom_text(const Atom& a) {
    switch (a.kind) {
    case AtomKind::Func: return a.name;
    case AtomKind::Twist: return "tau[" + a.name + "]";
    case AtomKind::TwistInv: return "tauinv[" + a.name + "]";
    }
    return a.name;
}

Label Label::func(std::string name) {
    require_identifier(name);
    return Label({Atom{AtomKind::Func, std::move(name)}});
}

Label Label::twist(std::string index) {
    require_identifier(index);
    return Label({Atom{AtomKind::Twist, std::move(index)}});
}

Label Label::twist_inv(std::string index) {
    require_identifier(index);
    return Label({Atom{AtomKind::TwistInv, std::move(index)}});
}

std::vector<Atom> Label::normalized(std::vector<Atom> atoms) {
    std::vector<Atom> out;
    out.reserve(atoms.size());
    std::map<std::string, int> twist_power;
    for (Atom& a : atoms) {
        switch (a.kind) {
        case AtomKind::Func: out.push_back(std::move(a)); break;
        case AtomKind::Twist: ++twist_power[a.name]; break;
        case AtomKind::TwistInv: --twist_power[a.name]; break;
        }
    }
    for (const auto& [index, power] : twist_power) {
        const AtomKind kind = power > 0 ? AtomKind::Twist : AtomKind::TwistInv;
        for (int i = 0; i < std::abs(power); ++i) out.push_back(Atom{kind, index});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Label operator*(const Label& a, const Label& b) {
    std::vector<Atom> merged = a.atoms_;
    merged.insert(merged.end(), b.atoms_.begin(), b.atoms_.end());
    return Label(std::move(merged));
}

std::string Label::text() const {
    if (atoms_.empty()) return "1";
    // Twists read like coefficients, so display them ahead of the functions.
    std::vector<const Atom*> order;
    order.reserve(atoms_.size());
    for (const Atom& a : atoms_) order.push_back(&a);
    auto display_rank = [](AtomKind k) {
        return k == AtomKind::Twist ? 0 : k == AtomKind::TwistInv ? 1 : 2;
    };
    std::stable_sort(order.begin(), order.end(), [&](const Atom* x, const Atom* y) {
        const int rx = display_rank(x->kind), ry = display_rank(y->kind);
        return rx != ry ? rx < ry : x->name < y->name;
    });
    std::string out;
    for (const Atom* a : order) {
        if (!out.empty()) out += '*';
        out += atom_text(*a);
    }
    return out;
}

} // namespace volterra
