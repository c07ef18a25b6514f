#include "signpat/sign_pattern.hpp"

#include <charconv>

namespace signpat {

namespace {

const std::vector<std::string> kRowsT = {
    "++0000",
    "--+000",
    "000+00",
    "0000+0",
    "--000+",
    "+++0-0",
};

// Differs from T only at (3,1).
const std::vector<std::string> kRowsTprime = {
    "++0000",
    "--+000",
    "+00+00",
    "0000+0",
    "--000+",
    "+++0-0",
};

const std::vector<std::string> kRowsD = {
    "++",
    "--",
};

SignPattern repeat_diag(const SignPattern& block, int copies)
{
    std::vector<SignPattern> blocks(static_cast<std::size_t>(copies), block);
    return block_diag(blocks);
}

int parse_count(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw PreconditionError("bad block count in pattern name: " + std::string(s));
    return value;
}

}  // namespace

char to_char(Sign s)
{
    switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    }
    return '?';
}

Sign sign_from_char(char c)
{
    switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: throw PreconditionError(std::string("invalid sign character '") + c + "'");
    }
}

SignPattern::SignPattern(std::size_t n, std::vector<Sign> entries)
    : n_(n), entries_(std::move(entries))
{
    if (n_ == 0)
        throw PreconditionError("pattern order must be at least 1");
    if (entries_.size() != n_ * n_)
        throw PreconditionError("pattern needs n*n entries");
}

SignPattern SignPattern::from_rows(const std::vector<std::string>& rows)
{
    const std::size_t n = rows.size();
    std::vector<Sign> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw PreconditionError("pattern row '" + row + "' does not match order " + std::to_string(n));
        for (char c : row)
            e.push_back(sign_from_char(c));
    }
    return SignPattern(n, std::move(e));
}

std::vector<std::string> SignPattern::rows() const
{
    std::vector<std::string> out(n_, std::string(n_, '0'));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i][j] = to_char((*this)(i, j));
    return out;
}

PatternName parse_pattern_name(std::string_view text)
{
    using K = PatternName::Kind;
    if (text == "T") return {K::T};
    if (text == "Tprime" || text == "T'") return {K::Tprime};
    if (text == "D") return {K::D};
    if (text == "X" || text == "X_template") return {K::XTemplate};
    if (text == "S") return {K::S};
    if (text == "Sprime" || text == "S'") return {K::Sprime};
    if (text == "TD") return {K::TD};
    if (text == "U1") return {K::U1};
    if (text == "U2") return {K::U2};
    if (text == "U3") return {K::U3};
    if (text.size() >= 6 && text.substr(0, 2) == "V(" && text.back() == ')') {
        const auto inner = text.substr(2, text.size() - 3);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos)
            throw PreconditionError("V pattern needs V(t,d): " + std::string(text));
        return PatternName::v(parse_count(inner.substr(0, comma)), parse_count(inner.substr(comma + 1)));
    }
    throw PreconditionError("unknown pattern name: " + std::string(text));
}

std::string to_string(const PatternName& name)
{
    using K = PatternName::Kind;
    switch (name.kind) {
    case K::T: return "T";
    case K::Tprime: return "Tprime";
    case K::D: return "D";
    case K::XTemplate: return "X_template";
    case K::S: return "S";
    case K::Sprime: return "Sprime";
    case K::TD: return "TD";
    case K::U1: return "U1";
    case K::U2: return "U2";
    case K::U3: return "U3";
    case K::V: return "V(" + std::to_string(name.t) + "," + std::to_string(name.d) + ")";
    }
    return "?";
}

SignPattern builtin_pattern(const PatternName& name)
{
    using K = PatternName::Kind;
    static const SignPattern t_pattern = SignPattern::from_rows(kRowsT);
    static const SignPattern tprime_pattern = SignPattern::from_rows(kRowsTprime);
    static const SignPattern d_pattern = SignPattern::from_rows(kRowsD);

    switch (name.kind) {
    case K::T:
    case K::XTemplate:
        return t_pattern;
    case K::Tprime:
        return tprime_pattern;
    case K::D:
        return d_pattern;
    case K::S:
        return builtin_pattern(PatternName::v(1, 5));
    case K::Sprime: {
        std::vector<SignPattern> blocks{tprime_pattern};
        blocks.insert(blocks.end(), 5, d_pattern);
        return block_diag(blocks);
    }
    case K::TD:
    case K::U1:
        return block_diag(std::vector<SignPattern>{t_pattern, d_pattern});
    case K::U2:
        return repeat_diag(builtin_pattern({K::U1}), 2);
    case K::U3:
        return repeat_diag(builtin_pattern({K::U2}), 2);
    case K::V: {
        if (name.t < 0 || name.d < 0 || name.t + name.d < 1)
            throw PreconditionError("V(t,d) needs t >= 0, d >= 0 and t + d >= 1");
        std::vector<SignPattern> blocks;
        blocks.insert(blocks.end(), static_cast<std::size_t>(name.t), t_pattern);
        blocks.insert(blocks.end(), static_cast<std::size_t>(name.d), d_pattern);
        return block_diag(blocks);
    }
    }
    throw PreconditionError("unknown pattern kind");
}

SignPattern block_diag(std::span<const SignPattern> blocks)
{
    if (blocks.empty())
        throw PreconditionError("block_diag needs at least one block");
    std::size_t n = 0;
    for (const auto& b : blocks)
        n += b.order();
    std::vector<Sign> e(n * n, Sign::Zero);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.order(); ++i)
            for (std::size_t j = 0; j < b.order(); ++j)
                e[(offset + i) * n + offset + j] = b(i, j);
        offset += b.order();
    }
    return SignPattern(n, std::move(e));
}

SignPattern block_diag(const std::vector<SignPattern>& blocks)
{
    return block_diag(std::span<const SignPattern>(blocks));
}

bool is_superpattern(const SignPattern& p, const SignPattern& q)
{
    if (p.order() != q.order())
        throw PreconditionError("is_superpattern: patterns differ in order");
    for (std::size_t i = 0; i < p.order(); ++i)
        for (std::size_t j = 0; j < p.order(); ++j)
            if (q(i, j) != Sign::Zero && p(i, j) != q(i, j))
                return false;
    return true;
}

}  // namespace signpat
