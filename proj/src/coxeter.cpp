#include "soergel/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "soergel/error.hpp"

namespace soergel {

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet::GeneratorSet(std::initializer_list<Generator> gens) noexcept
{
    for (Generator s : gens)
        insert(s);
}

std::vector<Generator> GeneratorSet::members() const
{
    std::vector<Generator> out;
    for (Generator s = 0; s < 64; ++s)
        if (contains(s))
            out.push_back(s);
    return out;
}

std::string GeneratorSet::to_string() const
{
    std::string out;
    for (Generator s : members()) {
        if (!out.empty())
            out += ',';
        out += 's' + std::to_string(s + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries) : rank_(rank), entries_(std::move(entries))
{
    if (rank_ < 1)
        throw InvalidInput("Coxeter matrix rank must be positive");
    if (rank_ > 64)
        throw InvalidInput("Coxeter matrix rank above 64 is not supported");
    if (entries_.size() != static_cast<std::size_t>(rank_ * rank_))
        throw InvalidInput("Coxeter matrix has the wrong number of entries");
    for (int s = 0; s < rank_; ++s) {
        if ((*this)(s, s) != 1)
            throw InvalidInput("Coxeter matrix diagonal must be 1");
        for (int t = 0; t < rank_; ++t) {
            if ((*this)(s, t) != (*this)(t, s))
                throw InvalidInput("Coxeter matrix must be symmetric");
            if (s != t && (*this)(s, t) < 2)
                throw InvalidInput("off-diagonal bond labels must be >= 2");
        }
    }
}

namespace {

struct Bond {
    int s, t, m;
};

std::vector<Bond> dynkin_bonds(char family, int n)
{
    std::vector<Bond> bonds;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i)
            bonds.push_back({i, i + 1, 3});
    };
    switch (family) {
    case 'A':
        if (n < 1)
            break;
        chain(n);
        return bonds;
    case 'B':
    case 'C':
        if (n < 2)
            break;
        chain(n - 1);
        bonds.push_back({n - 2, n - 1, 4});
        return bonds;
    case 'D':
        if (n < 4)
            break;
        chain(n - 1);
        bonds.push_back({n - 3, n - 1, 3});
        return bonds;
    case 'E':
        if (n < 6 || n > 8)
            break;
        bonds.push_back({0, 2, 3});
        bonds.push_back({1, 3, 3});
        for (int i = 2; i + 1 < n; ++i)
            bonds.push_back({i, i + 1, 3});
        return bonds;
    case 'F':
        if (n != 4)
            break;
        return {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}};
    case 'G':
        if (n != 2)
            break;
        return {{0, 1, 6}};
    case 'H':
        if (n < 3 || n > 4)
            break;
        bonds.push_back({0, 1, 5});
        for (int i = 1; i + 1 < n; ++i)
            bonds.push_back({i, i + 1, 3});
        return bonds;
    default:
        break;
    }
    throw InvalidInput(std::string("unknown Coxeter type ") + family + std::to_string(n));
}

} // namespace

CoxeterMatrix CoxeterMatrix::named(std::string_view name)
{
    std::vector<std::pair<int, std::vector<Bond>>> factors;
    std::size_t pos = 0;
    auto fail = [&]() -> CoxeterMatrix {
        throw InvalidInput("cannot parse Coxeter type '" + std::string(name) + "'");
    };
    while (pos < name.size()) {
        const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[pos++])));
        std::size_t digits = pos;
        while (digits < name.size() && std::isdigit(static_cast<unsigned char>(name[digits])))
            ++digits;
        if (digits == pos)
            return fail();
        const int n = std::stoi(std::string(name.substr(pos, digits - pos)));
        pos = digits;
        if (family == 'I') {
            if (n != 2 || pos >= name.size() || name[pos] != '(')
                return fail();
            const std::size_t close = name.find(')', pos);
            if (close == std::string_view::npos || close == pos + 1)
                return fail();
            const std::string label(name.substr(pos + 1, close - pos - 1));
            if (!std::all_of(label.begin(), label.end(), [](unsigned char c) { return std::isdigit(c); }))
                return fail();
            const int m = std::stoi(label);
            if (m < 2)
                return fail();
            factors.push_back({2, {{0, 1, m}}});
            pos = close + 1;
        } else {
            factors.push_back({n, dynkin_bonds(family, n)});
        }
        if (pos < name.size()) {
            if (name[pos] != 'x' && name[pos] != 'X')
                return fail();
            ++pos;
            if (pos == name.size())
                return fail();
        }
    }
    if (factors.empty())
        return fail();
    int rank = 0;
    for (const auto& f : factors)
        rank += f.first;
    std::vector<int> entries(static_cast<std::size_t>(rank * rank), 2);
    for (int i = 0; i < rank; ++i)
        entries[static_cast<std::size_t>(i * rank + i)] = 1;
    int offset = 0;
    for (const auto& [n, bonds] : factors) {
        for (const Bond& b : bonds) {
            entries[static_cast<std::size_t>((offset + b.s) * rank + offset + b.t)] = b.m;
            entries[static_cast<std::size_t>((offset + b.t) * rank + offset + b.s)] = b.m;
        }
        offset += n;
    }
    return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::parse(std::istream& in)
{
    int rank = 0;
    if (!(in >> rank) || rank < 1)
        throw InvalidInput("matrix file: expected a positive rank");
    std::vector<int> entries(static_cast<std::size_t>(rank * rank), 1);
    for (int s = 0; s < rank; ++s)
        for (int t = s + 1; t < rank; ++t) {
            int m = 0;
            if (!(in >> m))
                throw InvalidInput("matrix file: expected " + std::to_string(rank * (rank - 1) / 2) +
                                   " bond labels");
            entries[static_cast<std::size_t>(s * rank + t)] = m;
            entries[static_cast<std::size_t>(t * rank + s)] = m;
        }
    std::string extra;
    if (in >> extra)
        throw InvalidInput("matrix file: trailing data '" + extra + "'");
    return CoxeterMatrix(rank, std::move(entries));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Key = std::vector<int>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : k) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

/// Faithful action of W on the root lattice of a crystallographic
/// realization. A key lists the images of the simple roots, column by column.
class RootRealization {
public:
    explicit RootRealization(const CoxeterMatrix& m) : n_(m.rank()), cartan_(static_cast<std::size_t>(n_ * n_), 0)
    {
        for (int i = 0; i < n_; ++i) {
            cartan(i, i) = 2;
            for (int j = i + 1; j < n_; ++j) {
                // a_ij * a_ji = 4 cos^2(pi / m)
                switch (m(i, j)) {
                case 2: break;
                case 3: cartan(i, j) = -1; cartan(j, i) = -1; break;
                case 4: cartan(i, j) = -1; cartan(j, i) = -2; break;
                case 6: cartan(i, j) = -1; cartan(j, i) = -3; break;
                default:
                    throw UnsupportedBond("bond label " + std::to_string(m(i, j)) + " between s" +
                                          std::to_string(i + 1) + " and s" + std::to_string(j + 1) +
                                          " has no integral realization (only 2, 3, 4, 6 in rank >= 3)");
                }
            }
        }
    }

    Key identity() const
    {
        Key k(static_cast<std::size_t>(n_ * n_), 0);
        for (int i = 0; i < n_; ++i)
            k[static_cast<std::size_t>(i * n_ + i)] = 1;
        return k;
    }

    Key right(const Key& w, Generator s) const
    {
        Key out = w;
        for (int j = 0; j < n_; ++j) {
            const int c = cartan(s, j);
            if (c == 0)
                continue;
            for (int i = 0; i < n_; ++i)
                out[idx(j, i)] -= c * w[idx(s, i)];
        }
        return out;
    }

    Key left(const Key& w, Generator s) const
    {
        Key out = w;
        for (int j = 0; j < n_; ++j) {
            int pairing = 0;
            for (int i = 0; i < n_; ++i)
                pairing += w[idx(j, i)] * cartan(s, i);
            out[idx(j, s)] -= pairing;
        }
        return out;
    }

private:
    int& cartan(int i, int j) { return cartan_[static_cast<std::size_t>(i * n_ + j)]; }
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * n_ + j)]; }
    std::size_t idx(int column, int row) const { return static_cast<std::size_t>(column * n_ + row); }

    int n_;
    std::vector<int> cartan_;
};

/// Rank-2 group of order 2m as alternating words {first letter, length};
/// the longest word is stored with first letter 0.
class DihedralRealization {
public:
    explicit DihedralRealization(int m) : m_(m) {}

    Key identity() const { return {0, 0}; }

    Key right(const Key& w, Generator s) const
    {
        const int start = w[0];
        const int len = w[1];
        if (len == 0)
            return {s, 1};
        if (len == m_) {
            // w0 = (alternating word of length m ending in s) * s
            const int start_ending_in_s = (m_ % 2 == 1) ? s : 1 - s;
            return normalize(start_ending_in_s, m_ - 1);
        }
        const int last = (len % 2 == 1) ? start : 1 - start;
        return normalize(start, last == s ? len - 1 : len + 1);
    }

    Key left(const Key& w, Generator s) const
    {
        const int start = w[0];
        const int len = w[1];
        if (len == 0)
            return {s, 1};
        if (len == m_)
            return normalize(1 - s, m_ - 1);
        if (start == s)
            return normalize(1 - s, len - 1);
        return normalize(s, len + 1);
    }

private:
    Key normalize(int start, int len) const
    {
        if (len == 0 || len == m_)
            return {0, len};
        return {start, len};
    }

    int m_;
};

bool has_cycle(const CoxeterMatrix& m)
{
    std::vector<int> parent(static_cast<std::size_t>(m.rank()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int s = 0; s < m.rank(); ++s)
        for (int t = s + 1; t < m.rank(); ++t) {
            if (m(s, t) == 2)
                continue;
            const int a = find(s), b = find(t);
            if (a == b)
                return true;
            parent[static_cast<std::size_t>(a)] = b;
        }
    return false;
}

struct RawTables {
    std::vector<int> length;
    std::vector<std::uint32_t> right, left;
};

template <typename Realization>
RawTables enumerate(const Realization& real, int rank, std::size_t cap)
{
    std::vector<Key> keys;
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
    RawTables t;
    keys.push_back(real.identity());
    index.emplace(keys.back(), 0);
    t.length.push_back(0);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (Generator s = 0; s < rank; ++s) {
            Key next = real.right(keys[i], s);
            if (index.find(next) != index.end())
                continue;
            if (keys.size() >= cap)
                throw GroupTooLarge("Coxeter group has more than " + std::to_string(cap) +
                                    " elements (infinite or above the enumeration cap)");
            index.emplace(next, static_cast<std::uint32_t>(keys.size()));
            keys.push_back(std::move(next));
            t.length.push_back(t.length[i] + 1);
        }
    }
    const std::size_t n = keys.size();
    const auto r = static_cast<std::size_t>(rank);
    t.right.resize(n * r);
    t.left.resize(n * r);
    for (std::size_t i = 0; i < n; ++i)
        for (Generator s = 0; s < rank; ++s) {
            t.right[i * r + static_cast<std::size_t>(s)] = index.at(real.right(keys[i], s));
            t.left[i * r + static_cast<std::size_t>(s)] = index.at(real.left(keys[i], s));
        }
    return t;
}

} // namespace

struct CoxeterSystem::BruhatMemo {
    explicit BruhatMemo(std::size_t n) : rows(n), done(n) {}
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::once_flag> done;
};

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {}
CoxeterSystem::CoxeterSystem(CoxeterSystem&&) noexcept = default;
CoxeterSystem& CoxeterSystem::operator=(CoxeterSystem&&) noexcept = default;
CoxeterSystem::~CoxeterSystem() = default;

CoxeterSystem CoxeterSystem::build(const CoxeterMatrix& matrix, std::size_t cap)
{
    if (cap == 0)
        throw InvalidInput("enumeration cap must be positive");
    const int rank = matrix.rank();
    RawTables raw;
    if (rank == 2) {
        raw = enumerate(DihedralRealization(matrix(0, 1)), rank, cap);
    } else {
        RootRealization real(matrix); // rejects unsupported bonds first
        if (has_cycle(matrix))
            throw GroupTooLarge("Coxeter graph contains a cycle, so the group is infinite");
        raw = enumerate(real, rank, cap);
    }

    const std::size_t n = raw.length.size();
    const auto r = static_cast<std::size_t>(rank);

    // Lexicographically smallest reduced words: the first letter is the
    // smallest left descent. Raw indices are in BFS order, so shorter
    // elements are always done first.
    std::vector<Word> raw_words(n);
    for (std::size_t w = 1; w < n; ++w) {
        for (Generator s = 0; s < rank; ++s) {
            const std::uint32_t sw = raw.left[w * r + static_cast<std::size_t>(s)];
            if (raw.length[sw] < raw.length[w]) {
                raw_words[w].reserve(static_cast<std::size_t>(raw.length[w]));
                raw_words[w].push_back(s);
                raw_words[w].insert(raw_words[w].end(), raw_words[sw].begin(), raw_words[sw].end());
                break;
            }
        }
    }

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (raw.length[a] != raw.length[b])
            return raw.length[a] < raw.length[b];
        return raw_words[a] < raw_words[b];
    });
    std::vector<std::uint32_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = static_cast<std::uint32_t>(i);

    CoxeterSystem sys(matrix);
    sys.length_.resize(n);
    sys.words_.resize(n);
    sys.right_.resize(n * r);
    sys.left_.resize(n * r);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t old = order[i];
        sys.length_[i] = raw.length[old];
        sys.words_[i] = std::move(raw_words[old]);
        for (std::size_t s = 0; s < r; ++s) {
            sys.right_[i * r + s] = Element{position[raw.right[old * r + s]]};
            sys.left_[i * r + s] = Element{position[raw.left[old * r + s]]};
        }
    }
    sys.longest_ = Element{static_cast<std::uint32_t>(n - 1)};

    sys.inverse_.resize(n);
    sys.inverse_[0] = Element::identity();
    for (std::size_t i = 1; i < n; ++i) {
        // w = w' s with w' the prefix of the canonical word, so w^-1 = s w'^-1.
        const Generator s = sys.words_[i].back();
        const Element prefix = sys.mult_gen(Element{static_cast<std::uint32_t>(i)}, s, Side::Right);
        sys.inverse_[i] = sys.mult_gen(sys.inverse_[prefix.index], s, Side::Left);
    }
    sys.bruhat_ = std::make_unique<BruhatMemo>(n);
    return sys;
}

GeneratorSet CoxeterSystem::all_generators() const noexcept
{
    return GeneratorSet(rank() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rank()) - 1));
}

std::vector<Element> CoxeterSystem::elements() const
{
    std::vector<Element> out(size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Element{static_cast<std::uint32_t>(i)};
    return out;
}

Element CoxeterSystem::mult_gen(Element w, Generator s, Side side) const
{
    const std::size_t i = w.index * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(s);
    return side == Side::Right ? right_[i] : left_[i];
}

Element CoxeterSystem::multiply(Element x, Element y) const
{
    for (Generator s : reduced_word(y))
        x = mult_gen(x, s, Side::Right);
    return x;
}

Element CoxeterSystem::evaluate(const Word& word) const
{
    Element w = Element::identity();
    for (Generator s : word) {
        if (s < 0 || s >= rank())
            throw InvalidInput("generator index out of range");
        w = mult_gen(w, s, Side::Right);
    }
    return w;
}

bool CoxeterSystem::is_descent(Element w, Generator s, Side side) const
{
    return length(mult_gen(w, s, side)) < length(w);
}

GeneratorSet CoxeterSystem::descents(Element w, Side side) const
{
    GeneratorSet out;
    for (Generator s = 0; s < rank(); ++s)
        if (is_descent(w, s, side))
            out.insert(s);
    return out;
}

const std::vector<std::uint64_t>& CoxeterSystem::bruhat_row(Element y) const
{
    std::call_once(bruhat_->done[y.index], [&] {
        const std::size_t n = size();
        std::vector<std::uint64_t> row((n + 63) / 64, 0);
        if (y == Element::identity()) {
            row[0] = 1;
        } else {
            // s with sy < y: x <= y iff min(x, sx) <= sy.
            const Generator s = reduced_word(y).front();
            const Element sy = mult_gen(y, s, Side::Left);
            const auto& below = bruhat_row(sy);
            for (std::size_t x = 0; x < n; ++x) {
                if (length_[x] > length(y))
                    break;
                const Element sx = mult_gen(Element{static_cast<std::uint32_t>(x)}, s, Side::Left);
                const std::size_t m = length(sx) < length_[x] ? sx.index : x;
                if ((below[m / 64] >> (m % 64)) & 1U)
                    row[x / 64] |= std::uint64_t{1} << (x % 64);
            }
        }
        bruhat_->rows[y.index] = std::move(row);
    });
    return bruhat_->rows[y.index];
}

bool CoxeterSystem::bruhat_leq(Element x, Element y) const
{
    if (length(x) > length(y))
        return false;
    const auto& row = bruhat_row(y);
    return (row[x.index / 64] >> (x.index % 64)) & 1U;
}

bool CoxeterSystem::is_finitary(GeneratorSet subset) const
{
    return (subset.bits() & ~all_generators().bits()) == 0;
}

std::vector<Element> CoxeterSystem::parabolic_subgroup(GeneratorSet subset) const
{
    std::vector<Element> out;
    for (std::size_t i = 0; i < size(); ++i) {
        const Word& w = words_[i];
        if (std::all_of(w.begin(), w.end(), [&](Generator s) { return subset.contains(s); }))
            out.push_back(Element{static_cast<std::uint32_t>(i)});
    }
    return out;
}

Element CoxeterSystem::longest_in(GeneratorSet subset) const
{
    // Canonical order is length-increasing and W_I has a unique longest element.
    return parabolic_subgroup(subset).back();
}

LaurentPoly CoxeterSystem::poincare(GeneratorSet subset) const
{
    std::vector<std::pair<int, Integer>> terms;
    for (Element w : parabolic_subgroup(subset))
        terms.emplace_back(2 * length(w), 1);
    return LaurentPoly::from_terms(std::move(terms));
}

std::vector<GeneratorSet> CoxeterSystem::finitary_subsets() const
{
    if (rank() > 20)
        throw InvalidInput("refusing to list subsets of a rank above 20");
    std::vector<GeneratorSet> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rank()); ++bits)
        out.emplace_back(bits);
    return out;
}

bool CoxeterSystem::is_min_coset_rep(Element w, GeneratorSet subset) const
{
    for (Generator s : subset.members())
        if (s < rank() && is_descent(w, s, Side::Right))
            return false;
    return true;
}

std::pair<Element, Element> CoxeterSystem::coset_decompose(Element w, GeneratorSet subset) const
{
    Element y = w;
    Element u = Element::identity();
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (Generator s : subset.members()) {
            if (s < rank() && is_descent(y, s, Side::Right)) {
                y = mult_gen(y, s, Side::Right);
                u = mult_gen(u, s, Side::Left);
                stripped = true;
                break;
            }
        }
    }
    return {y, u};
}

std::vector<Element> CoxeterSystem::min_reps(GeneratorSet subset) const
{
    std::vector<Element> out;
    for (Element w : elements())
        if (is_min_coset_rep(w, subset))
            out.push_back(w);
    return out;
}

std::string CoxeterSystem::word_string(Element w) const
{
    const Word& word = reduced_word(w);
    if (word.empty())
        return "e";
    std::string out;
    for (Generator s : word) {
        if (!out.empty())
            out += '.';
        out += 's' + std::to_string(s + 1);
    }
    return out;
}

namespace {

Generator parse_label(std::string_view label, int rank)
{
    if (label.size() < 2 || label[0] != 's' ||
        !std::all_of(label.begin() + 1, label.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidInput("bad generator label '" + std::string(label) + "' (expected s1..s" +
                           std::to_string(rank) + ")");
    const int k = std::stoi(std::string(label.substr(1)));
    if (k < 1 || k > rank)
        throw InvalidInput("generator label '" + std::string(label) + "' does not exist in rank " +
                           std::to_string(rank));
    return k - 1;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(sep, start);
        parts.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    return parts;
}

} // namespace

Element CoxeterSystem::parse_word(std::string_view text) const
{
    if (text.empty() || text == "e" || text == "id")
        return Element::identity();
    Word word;
    for (std::string_view label : split(text, '.'))
        word.push_back(parse_label(label, rank()));
    return evaluate(word);
}

GeneratorSet CoxeterSystem::parse_subset(std::string_view text) const
{
    GeneratorSet out;
    if (text.empty())
        return out;
    for (std::string_view label : split(text, ','))
        out.insert(parse_label(label, rank()));
    return out;
}

} // namespace soergel
