#include "hwcl/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cstdlib>
#include <functional>

#include "hwcl/errors.hpp"

namespace hwcl {

Weight::Weight(std::vector<long long> prefix, long long tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

long long Weight::size_abs() const {
    if (tail_ != 0)
        throw std::invalid_argument("size_abs: weight has infinite support (tail != 0)");
    long long s = 0;
    for (long long v : prefix_) s += std::llabs(v);
    return s;
}

std::vector<long long> Weight::truncate(std::size_t k) const {
    std::vector<long long> out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = entry(j);
    return out;
}

std::string Weight::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < prefix_.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(prefix_[j]);
    }
    s += ';';
    s += std::to_string(tail_);
    return s;
}

FiniteWeight::FiniteWeight(std::vector<long long> entries)
    : entries_(std::move(entries)) {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

long long FiniteWeight::size_abs() const {
    long long s = 0;
    for (long long v : entries_) s += std::llabs(v);
    return s;
}

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view token, std::string_view what) {
    token = trim(token);
    if (token.empty())
        throw parse_error(std::string("empty ") + std::string(what) + " token");
    long long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("not an integer: '" + std::string(token) + "'");
    return value;
}

std::vector<long long> parse_int_list(std::string_view text) {
    std::vector<long long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = (comma == std::string_view::npos) ? text.size() : comma;
        out.push_back(parse_int(text.substr(start, end - start), "entry"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Weight parse_weight(std::string_view text) {
    text = trim(text);
    if (text.empty()) return Weight{};
    const std::size_t semi = text.find(';');
    if (semi != std::string_view::npos && text.find(';', semi + 1) != std::string_view::npos)
        throw parse_error("weight text contains more than one ';'");

    std::string_view head = (semi == std::string_view::npos) ? text : text.substr(0, semi);
    long long tail = 0;
    if (semi != std::string_view::npos)
        tail = parse_int(text.substr(semi + 1), "tail");

    std::vector<long long> prefix;
    head = trim(head);
    if (!head.empty()) prefix = parse_int_list(head);
    return Weight{std::move(prefix), tail};
}

Partition conjugate(const Partition& p) {
    std::vector<long long> out;
    const long long width = p.part(0);
    out.reserve(static_cast<std::size_t>(width));
    for (long long i = 1; i <= width; ++i) {
        long long count = 0;
        for (long long part : p.parts())
            if (part >= i) ++count;
        out.push_back(count);
    }
    return Partition{std::move(out)};
}

std::pair<Partition, Partition> split_signs(const FiniteWeight& w) {
    std::vector<long long> plus, minus;
    for (long long v : w.entries()) {
        if (v > 0) plus.push_back(v);
        if (v < 0) minus.push_back(-v);
    }
    std::sort(plus.begin(), plus.end(), std::greater<>());
    std::sort(minus.begin(), minus.end(), std::greater<>());
    return {Partition{std::move(plus)}, Partition{std::move(minus)}};
}

Weight dual_weight(const Weight& w) {
    std::vector<long long> prefix = w.prefix();
    for (long long& v : prefix) v = -v;
    return Weight{std::move(prefix), -w.tail()};
}

} // namespace hwcl
