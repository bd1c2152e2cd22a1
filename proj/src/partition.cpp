#include "howe/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw ParseError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("partition parts must be weakly decreasing");
        weight_ += parts[i];
    }
    parts_ = std::move(parts);
}

Partition Partition::from_multiset(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    return Partition(std::move(values));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::transposed() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j)
        t[j - 1] = static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
    return Partition(std::move(t));
}

std::vector<int> Partition::hook_lengths() const {
    const Partition t = transposed();
    std::vector<int> hooks;
    hooks.reserve(weight_);
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j)
            hooks.push_back(part(i) + t.part(j) - i - j + 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<int>());
    return hooks;
}

long long Partition::weighted_row_sum() const {
    long long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        s += static_cast<long long>(i) * parts_[i];
    return s;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "-" || text == "0") return {};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view token =
            trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (token.empty()) throw ParseError("empty part in partition text");
        int value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw ParseError("bad character in partition text");
            value = value * 10 + (c - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

bool lex_less(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) < b.part(i);
    }
    return false;
}

bool precedes(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        if (a.part(i) > b.part(i) || a.part(i) < b.part(i) - 1) return false;
    }
    return true;
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> all = a.parts();
    all.insert(all.end(), b.parts().begin(), b.parts().end());
    return Partition::from_multiset(std::move(all));
}

Partition staircase(int d) {
    std::vector<int> parts;
    for (int i = d; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

TwoCore two_core(const Partition& p) {
    // Parity counts of any beta-set representative determine the 2-core.
    // Use the representative {p_i + (m - i)} on the raw part list.
    const int m = p.length();
    int odd = 0, even = 0;
    for (int i = 1; i <= m; ++i)
        ((p.part(i) + (m - i)) % 2 ? odd : even)++;
    const int d = odd >= even ? odd - even : even - odd - 1;
    return TwoCore{d};
}

namespace {
void emit_partitions(int n, int cap, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int k = std::min(n, cap); k >= 1; --k) {
        prefix.push_back(k);
        emit_partitions(n - k, k, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

std::string Bipartition::to_string() const {
    return "[" + top.to_string() + " ; " + bottom.to_string() + "]";
}

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int k = 0; k <= n; ++k) {
        for (const Partition& t : partitions_of(k))
            for (const Partition& b : partitions_of(n - k))
                out.push_back(Bipartition{t, b});
    }
    return out;
}

}  // namespace howe
