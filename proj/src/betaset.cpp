#include "howe/betaset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {

BetaSet::BetaSet(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0) throw ParseError("beta-set entries must be non-negative");
        if (i > 0 && entries[i] == entries[i - 1])
            throw ParseError("beta-set entries must be distinct");
    }
    entries_ = std::move(entries);
}

bool BetaSet::contains(int x) const {
    return std::binary_search(entries_.rbegin(), entries_.rend(), x);
}

long long BetaSet::rank() const {
    long long s = 0;
    for (int x : entries_) s += x;
    const long long m = size();
    return s - m * (m - 1) / 2;
}

BetaSet BetaSet::shifted_up() const {
    std::vector<int> e;
    e.reserve(entries_.size() + 1);
    for (int x : entries_) e.push_back(x + 1);
    e.push_back(0);
    return BetaSet(std::move(e));
}

BetaSet BetaSet::reduced() const {
    std::vector<int> e = entries_;
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
        for (int& x : e) --x;
    }
    return BetaSet(std::move(e));
}

Partition BetaSet::to_partition() const {
    const int m = size();
    std::vector<int> parts;
    parts.reserve(m);
    for (int i = 0; i < m; ++i) {
        int p = entries_[i] - (m - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

BetaSet BetaSet::of_partition(const Partition& p) {
    const int d = two_core(p).d;
    int count = p.length();
    if ((count + d) % 2 != 0) ++count;  // pad with one zero part
    std::vector<int> e;
    e.reserve(count);
    for (int i = 1; i <= count; ++i) e.push_back(p.part(i) + (count - i));
    return BetaSet(std::move(e));
}

std::string BetaSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << '}';
    return os.str();
}

BetaSet BetaSet::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("beta-set text must be brace-delimited");
    text = trim(text.substr(1, text.size() - 2));
    if (text.empty()) return {};
    std::vector<int> entries;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view token =
            trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (token.empty()) throw ParseError("empty entry in beta-set text");
        int value = 0;
        for (char c : token) {
            if (c < '0' || c > '9') throw ParseError("bad character in beta-set text");
            value = value * 10 + (c - '0');
        }
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return BetaSet(std::move(entries));
}

ParitySplit parity_split(const BetaSet& x) {
    std::vector<int> odd, even, oddh, evenh;
    for (int e : x.entries()) {
        if (e % 2) {
            odd.push_back(e);
            oddh.push_back((e - 1) / 2);
        } else {
            even.push_back(e);
            evenh.push_back(e / 2);
        }
    }
    return ParitySplit{BetaSet(std::move(odd)), BetaSet(std::move(even)),
                       BetaSet(std::move(oddh)), BetaSet(std::move(evenh))};
}

long long dim_degree(const BetaSet& x) {
    const auto& e = x.entries();
    const long long m = x.size();
    long long cross = 0, pairsum = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        cross += (m - 1 - static_cast<long long>(i)) * e[i];
        pairsum += static_cast<long long>(e[i]) * (e[i] + 1) / 2;
    }
    const long long n = x.rank();
    return cross - pairsum + n * (n + 1) / 2 - m * (m - 1) * (m - 2) / 6;
}

}  // namespace howe
