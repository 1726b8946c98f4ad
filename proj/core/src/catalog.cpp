#include "powerlambda/catalog.hpp"

#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "powerlambda/arith.hpp"
#include "powerlambda/errors.hpp"

namespace powerlambda {

namespace {

constexpr std::uint64_t kMaxOrder = 10000;
constexpr std::uint64_t kMaxAbelianOrder = 2048;

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GroupSpec parse()
    {
        GroupSpec spec = parse_spec();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw SpecError("invalid group spec '" + std::string(text_) + "' at position "
                        + std::to_string(pos_) + ": " + what);
    }

    bool consume(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::uint64_t number()
    {
        std::uint64_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
            fail("expected a number");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    GroupSpec parse_spec()
    {
        GroupSpec spec;
        if (consume("PSL2_")) {
            spec.family = Family::PSL2;
            spec.n = number();
        } else if (consume("X(")) {
            spec.family = Family::Product;
            spec.factors.push_back(parse_spec());
            expect(',');
            spec.factors.push_back(parse_spec());
            expect(')');
        } else if (consume("C")) {
            spec.family = Family::Cyclic;
            spec.n = number();
        } else if (consume("D")) {
            spec.family = Family::Dihedral;
            spec.n = number();
        } else if (consume("Q")) {
            spec.family = Family::Quaternion;
            spec.n = number();
        } else if (consume("E")) {
            spec.family = Family::ElementaryAbelian;
            spec.n = number();
            expect('_');
            spec.k = number();
        } else if (consume("S")) {
            spec.family = Family::Symmetric;
            spec.n = number();
        } else if (consume("A")) {
            spec.family = Family::Alternating;
            spec.n = number();
        } else {
            fail("unknown family tag");
        }
        validate(spec);
        return spec;
    }

    void validate(const GroupSpec& spec) const
    {
        auto require = [&](bool ok, const char* what) {
            if (!ok) {
                throw SpecError("group spec " + to_string(spec) + " out of range: " + what);
            }
        };
        switch (spec.family) {
        case Family::Cyclic:
            require(spec.n >= 2 && spec.n <= kMaxAbelianOrder, "C<n> needs 2 <= n <= 2048");
            break;
        case Family::Dihedral:
            require(spec.n >= 3 && 2 * spec.n <= kMaxOrder, "D<n> needs n >= 3 and 2n <= 10000");
            break;
        case Family::Quaternion:
            require(spec.n >= 2 && 4 * spec.n <= kMaxOrder, "Q<n> needs n >= 2 and 4n <= 10000");
            break;
        case Family::ElementaryAbelian: {
            require(is_prime(spec.n), "E<p>_<k> needs p prime");
            require(spec.k >= 1, "E<p>_<k> needs k >= 1");
            std::uint64_t order = 1;
            for (std::uint64_t i = 0; i < spec.k && order <= kMaxAbelianOrder; ++i) {
                order *= spec.n;
            }
            require(order <= kMaxAbelianOrder, "E<p>_<k> needs p^k <= 2048");
            break;
        }
        case Family::Symmetric:
            require(spec.n >= 2 && spec.n <= 7, "S<n> needs 2 <= n <= 7");
            break;
        case Family::Alternating:
            require(spec.n >= 3 && spec.n <= 7, "A<n> needs 3 <= n <= 7");
            break;
        case Family::PSL2:
            require(is_prime(spec.n) && spec.n >= 5 && spec.n <= 13,
                    "PSL2_<p> needs p prime with 5 <= p <= 13");
            break;
        case Family::Product:
            require(advertised_order(spec) <= kMaxOrder, "product order exceeds 10000");
            break;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string word_name(const std::vector<std::uint64_t>& exponents, std::string_view letters)
{
    std::string out;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += letters[j];
        if (exponents[j] != 1) {
            out += '^' + std::to_string(exponents[j]);
        }
    }
    return out.empty() ? "1" : out;
}

Permutation shift_cycle(std::size_t degree, std::size_t offset, std::size_t len)
{
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0U);
    for (std::size_t i = 0; i < len; ++i) {
        p[offset + i] = static_cast<std::uint32_t>(offset + (i + 1) % len);
    }
    return p;
}

ElementId generator_id(const FiniteGroup& group, std::size_t k)
{
    return *group.find(group.generators()[k]);
}

// Names every element a^i b^j ... with 0 <= exponent < radix, in mixed-radix
// order, where the letters stand for generators 0, 1, ... of the group.
void name_by_words(FiniteGroup& group, const std::vector<std::uint64_t>& radices)
{
    static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
    std::vector<ElementId> gens;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < radices.size(); ++k) {
        gens.push_back(generator_id(group, k));
        total *= radices[k];
    }
    std::vector<std::string> names(group.order());
    std::vector<std::uint64_t> exps(radices.size(), 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t j = radices.size(); j-- > 0;) {
            exps[j] = rest % radices[j];
            rest /= radices[j];
        }
        ElementId g = FiniteGroup::identity();
        for (std::size_t j = 0; j < radices.size(); ++j) {
            g = group.multiply(g, group.power(gens[j], exps[j]));
        }
        names[g] = word_name(exps, kLetters);
    }
    group.set_names(std::move(names));
}

void name_by_cycles(FiniteGroup& group, const std::function<std::string(std::uint32_t)>& point)
{
    std::vector<std::string> names(group.order());
    for (std::size_t g = 0; g < group.order(); ++g) {
        auto perm = group.permutation(static_cast<ElementId>(g));
        std::string out;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t start = 0; start < perm.size(); ++start) {
            if (seen[start] || perm[start] == start) {
                continue;
            }
            out += '(';
            for (std::size_t x = start; !seen[x]; x = perm[x]) {
                seen[x] = true;
                if (x != start) {
                    out += ' ';
                }
                out += point(static_cast<std::uint32_t>(x));
            }
            out += ')';
        }
        names[g] = out.empty() ? "()" : out;
    }
    group.set_names(std::move(names));
}

std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t p)
{
    for (std::uint64_t y = 1; y < p; ++y) {
        if (x * y % p == 1) {
            return y;
        }
    }
    throw std::logic_error("mod_inverse: no inverse");
}

FiniteGroup build_cyclic(std::uint64_t n)
{
    std::vector<Permutation> gens{shift_cycle(n, 0, n)};
    FiniteGroup g = close_generators(gens);
    name_by_words(g, {n});
    return g;
}

FiniteGroup build_dihedral(std::uint64_t n)
{
    Permutation reflect(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        reflect[x] = static_cast<std::uint32_t>((n - x) % n);
    }
    std::vector<Permutation> gens{shift_cycle(n, 0, n), reflect};
    FiniteGroup g = close_generators(gens);
    name_by_words(g, {n, 2});
    return g;
}

// Right-regular representation on the normal forms a^i b^j (point i + 2n j)
// of <a, b : a^n = b^2, a^{2n} = 1, b^-1 a b = a^-1>.
FiniteGroup build_quaternion(std::uint64_t n)
{
    const std::uint64_t m = 2 * n;
    Permutation by_a(2 * m);
    Permutation by_b(2 * m);
    for (std::uint64_t i = 0; i < m; ++i) {
        by_a[i] = static_cast<std::uint32_t>((i + 1) % m);
        by_a[i + m] = static_cast<std::uint32_t>((i + m - 1) % m + m);
        by_b[i] = static_cast<std::uint32_t>(i + m);
        by_b[i + m] = static_cast<std::uint32_t>((i + n) % m);
    }
    std::vector<Permutation> gens{by_a, by_b};
    FiniteGroup g = close_generators(gens);
    name_by_words(g, {m, 2});
    return g;
}

FiniteGroup build_elementary_abelian(std::uint64_t p, std::uint64_t k)
{
    std::vector<Permutation> gens;
    for (std::uint64_t j = 0; j < k; ++j) {
        gens.push_back(shift_cycle(p * k, j * p, p));
    }
    FiniteGroup g = close_generators(gens);
    name_by_words(g, std::vector<std::uint64_t>(k, p));
    return g;
}

std::string plain_point(std::uint32_t x) { return std::to_string(x); }

FiniteGroup build_symmetric(std::uint64_t n)
{
    Permutation transposition(n);
    std::iota(transposition.begin(), transposition.end(), 0U);
    std::swap(transposition[0], transposition[1]);
    std::vector<Permutation> gens{transposition, shift_cycle(n, 0, n)};
    FiniteGroup g = close_generators(gens);
    name_by_cycles(g, plain_point);
    return g;
}

FiniteGroup build_alternating(std::uint64_t n)
{
    std::vector<Permutation> gens;
    for (std::uint64_t i = 2; i < n; ++i) {
        Permutation c(n);
        std::iota(c.begin(), c.end(), 0U);
        c[0] = 1;
        c[1] = static_cast<std::uint32_t>(i);
        c[i] = 0;
        gens.push_back(c);
    }
    FiniteGroup g = close_generators(gens);
    name_by_cycles(g, plain_point);
    return g;
}

// Action on the projective line {0, ..., p-1, inf} with inf stored as point p,
// generated by x -> x + 1 and x -> -1/x.
FiniteGroup build_psl2(std::uint64_t p)
{
    const auto inf = static_cast<std::uint32_t>(p);
    Permutation translate(p + 1);
    Permutation invert(p + 1);
    for (std::uint64_t x = 0; x < p; ++x) {
        translate[x] = static_cast<std::uint32_t>((x + 1) % p);
        invert[x] = x == 0 ? inf : static_cast<std::uint32_t>((p - mod_inverse(x, p)) % p);
    }
    translate[inf] = inf;
    invert[inf] = 0;
    std::vector<Permutation> gens{translate, invert};
    FiniteGroup g = close_generators(gens);
    name_by_cycles(g, [inf](std::uint32_t x) { return x == inf ? std::string("inf")
                                                                : std::to_string(x); });
    return g;
}

FiniteGroup build_product(const GroupSpec& lhs_spec, const GroupSpec& rhs_spec)
{
    const FiniteGroup lhs = build_group(lhs_spec);
    const FiniteGroup rhs = build_group(rhs_spec);
    const std::size_t dl = lhs.degree();
    const std::size_t dr = rhs.degree();
    std::vector<Permutation> gens;
    for (const Permutation& g : lhs.generators()) {
        Permutation p(dl + dr);
        std::iota(p.begin(), p.end(), 0U);
        std::copy(g.begin(), g.end(), p.begin());
        gens.push_back(std::move(p));
    }
    for (const Permutation& h : rhs.generators()) {
        Permutation p(dl + dr);
        std::iota(p.begin(), p.end(), 0U);
        for (std::size_t x = 0; x < dr; ++x) {
            p[dl + x] = static_cast<std::uint32_t>(h[x] + dl);
        }
        gens.push_back(std::move(p));
    }
    FiniteGroup g = close_generators(gens);

    std::vector<std::string> names(g.order());
    Permutation left(dl);
    Permutation right(dr);
    for (std::size_t e = 0; e < g.order(); ++e) {
        auto perm = g.permutation(static_cast<ElementId>(e));
        std::copy(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(dl), left.begin());
        for (std::size_t x = 0; x < dr; ++x) {
            right[x] = static_cast<std::uint32_t>(perm[dl + x] - dl);
        }
        names[e] = "(" + lhs.name(*lhs.find(left)) + "," + rhs.name(*rhs.find(right)) + ")";
    }
    g.set_names(std::move(names));
    return g;
}

} // namespace

GroupSpec parse_group_spec(std::string_view text)
{
    return SpecParser(text).parse();
}

std::string to_string(const GroupSpec& spec)
{
    const std::string n = std::to_string(spec.n);
    switch (spec.family) {
    case Family::Cyclic: return "C" + n;
    case Family::Dihedral: return "D" + n;
    case Family::Quaternion: return "Q" + n;
    case Family::ElementaryAbelian: return "E" + n + "_" + std::to_string(spec.k);
    case Family::Symmetric: return "S" + n;
    case Family::Alternating: return "A" + n;
    case Family::PSL2: return "PSL2_" + n;
    case Family::Product:
        return "X(" + to_string(spec.factors.at(0)) + "," + to_string(spec.factors.at(1)) + ")";
    }
    return {};
}

std::uint64_t advertised_order(const GroupSpec& spec)
{
    switch (spec.family) {
    case Family::Cyclic: return spec.n;
    case Family::Dihedral: return 2 * spec.n;
    case Family::Quaternion: return 4 * spec.n;
    case Family::ElementaryAbelian: {
        std::uint64_t order = 1;
        for (std::uint64_t i = 0; i < spec.k; ++i) {
            order *= spec.n;
        }
        return order;
    }
    case Family::Symmetric: {
        std::uint64_t order = 1;
        for (std::uint64_t i = 2; i <= spec.n; ++i) {
            order *= i;
        }
        return order;
    }
    case Family::Alternating: {
        std::uint64_t order = 1;
        for (std::uint64_t i = 3; i <= spec.n; ++i) {
            order *= i;
        }
        return order;
    }
    case Family::PSL2: return spec.n * (spec.n - 1) * (spec.n + 1) / 2;
    case Family::Product:
        return advertised_order(spec.factors.at(0)) * advertised_order(spec.factors.at(1));
    }
    return 0;
}

bool is_nonabelian_simple(const GroupSpec& spec)
{
    return (spec.family == Family::Alternating && spec.n >= 5)
           || (spec.family == Family::PSL2 && spec.n >= 5);
}

bool is_prime_cyclic(const GroupSpec& spec)
{
    return spec.family == Family::Cyclic && is_prime(spec.n);
}

FiniteGroup build_group(const GroupSpec& spec)
{
    FiniteGroup group = [&] {
        switch (spec.family) {
        case Family::Cyclic: return build_cyclic(spec.n);
        case Family::Dihedral: return build_dihedral(spec.n);
        case Family::Quaternion: return build_quaternion(spec.n);
        case Family::ElementaryAbelian: return build_elementary_abelian(spec.n, spec.k);
        case Family::Symmetric: return build_symmetric(spec.n);
        case Family::Alternating: return build_alternating(spec.n);
        case Family::PSL2: return build_psl2(spec.n);
        case Family::Product: return build_product(spec.factors.at(0), spec.factors.at(1));
        }
        throw SpecError("unknown family");
    }();
    if (group.order() != advertised_order(spec)) {
        throw std::logic_error("build_group: " + to_string(spec) + " produced order "
                               + std::to_string(group.order()));
    }
    return group;
}

FiniteGroup build_group(std::string_view text)
{
    return build_group(parse_group_spec(text));
}

} // namespace powerlambda
