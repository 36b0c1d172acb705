#include "grassq/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace grassq {

std::string to_string(LieType t) {
    switch (t) {
        case LieType::C: return "C";
        case LieType::B: return "B";
        case LieType::D: return "D";
        case LieType::Dmax: return "Dmax";
    }
    return "?";
}

std::optional<LieType> lie_type_from_string(const std::string& s) {
    if (s == "C") return LieType::C;
    if (s == "B") return LieType::B;
    if (s == "D") return LieType::D;
    if (s == "Dmax") return LieType::Dmax;
    return std::nullopt;
}

bool GrassmannianSpec::quantum_supported() const {
    switch (lie_type) {
        case LieType::C: return true;
        case LieType::B: return k > 0;
        case LieType::D: return k > 1;
        case LieType::Dmax: return true;
    }
    return false;
}

GrassmannianSpec make_spec(LieType lie_type, int m, int n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("make_spec: m and n must be positive");
    GrassmannianSpec s;
    s.lie_type = lie_type;
    s.m = m;
    s.n = n;
    switch (lie_type) {
        case LieType::C:
            if (m > n) throw std::invalid_argument("make_spec: type C requires m <= n");
            s.k = n - m;
            s.ambient_N = 2 * n;
            s.space_dim = 2 * m * (n - m) + m * (m + 1) / 2;
            s.q_degrees = {n + s.k + 1};
            break;
        case LieType::B:
            if (m > n) throw std::invalid_argument("make_spec: type B requires m <= n");
            s.k = n - m;
            s.ambient_N = 2 * n + 1;
            s.space_dim = 2 * m * (n - m) + m * (m + 1) / 2;
            s.q_degrees = {n + s.k};
            break;
        case LieType::D:
            if (m == n + 1)
                throw std::invalid_argument(
                    "make_spec: OG(n+1,2n+2) has two families of maximal subspaces; "
                    "use Dmax for OG(n,2n+2)");
            if (m > n) throw std::invalid_argument("make_spec: type D requires m <= n");
            s.k = n + 1 - m;
            s.ambient_N = 2 * n + 2;
            s.space_dim = 2 * m * (n + 1 - m) + m * (m - 1) / 2;
            s.q_degrees = {n + s.k};
            break;
        case LieType::Dmax:
            if (m != n) throw std::invalid_argument("make_spec: Dmax requires m = n");
            s.k = 1;
            s.ambient_N = 2 * n + 2;
            s.space_dim = 2 * n + n * (n - 1) / 2;
            s.q_degrees = {n + 1, n + 1};
            break;
    }
    return s;
}

int SchubertLabel::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool SchubertLabel::operator<(const SchubertLabel& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    if (parts != o.parts) return parts > o.parts;  // lexicographically larger first
    return type < o.type;
}

SchubertLabel make_label(std::vector<int> parts, int type) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return SchubertLabel{std::move(parts), type};
}

static bool is_partition_shape(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

static bool is_k_strict(const std::vector<int>& parts, int k) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > k && parts[i] == parts[i - 1]) return false;
    }
    return true;
}

bool validate_label(const GrassmannianSpec& spec, const SchubertLabel& label) {
    if (!is_partition_shape(label.parts)) return false;
    if (!is_k_strict(label.parts, spec.k)) return false;
    if (label.length() > spec.m) return false;
    if (!label.parts.empty() && label.parts[0] > spec.max_part()) return false;
    bool has_k_part = std::find(label.parts.begin(), label.parts.end(), spec.k) !=
                      label.parts.end();
    if (spec.is_even_orthogonal()) {
        if (label.type < 0 || label.type > 2) return false;
        if ((label.type != 0) != has_k_part) return false;
    } else {
        if (label.type != 0) return false;
    }
    return true;
}

bool is_valid_index_set(const GrassmannianSpec& spec, const IndexSet& P) {
    if (static_cast<int>(P.entries.size()) != spec.m) return false;
    int N = spec.ambient_N;
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        int p = P.entries[i];
        if (p < 1 || p > N) return false;
        if (i > 0 && P.entries[i - 1] >= p) return false;
        if (spec.lie_type == LieType::B && p == spec.n + 1) return false;
    }
    for (int a : P.entries) {
        for (int b : P.entries) {
            if (a + b == N + 1) return false;
        }
    }
    return true;
}

static void enumerate_shapes(int max_part, int rows_left, int k, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (rows_left == 0) return;
    int hi = cur.empty() ? max_part : cur.back();
    for (int p = hi; p >= 1; --p) {
        if (p > k && !cur.empty() && cur.back() == p) continue;  // k-strict
        cur.push_back(p);
        enumerate_shapes(max_part, rows_left - 1, k, cur, out);
        cur.pop_back();
    }
}

std::vector<SchubertLabel> enumerate_basis(const GrassmannianSpec& spec) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    enumerate_shapes(spec.max_part(), spec.m, spec.k, cur, shapes);
    std::vector<SchubertLabel> basis;
    for (auto& sh : shapes) {
        bool has_k = std::find(sh.begin(), sh.end(), spec.k) != sh.end();
        if (spec.is_even_orthogonal() && has_k) {
            basis.push_back(SchubertLabel{sh, 1});
            basis.push_back(SchubertLabel{sh, 2});
        } else {
            basis.push_back(SchubertLabel{sh, 0});
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

IndexSet label_to_index_set(const GrassmannianSpec& spec, const SchubertLabel& label) {
    if (!validate_label(spec, label))
        throw std::invalid_argument("label_to_index_set: invalid label " + to_string(label));
    int m = spec.m, n = spec.n, k = spec.k;
    std::vector<int> p(static_cast<std::size_t>(m));
    if (!spec.is_even_orthogonal()) {
        for (int j = 1; j <= m; ++j) {
            int lj = label.part(j);
            int count = 0;
            for (int i = 1; i < j; ++i) {
                if (label.part(i) + lj <= 2 * k + j - i) ++count;
            }
            int pj = n + k + 1 - lj + count;
            if (spec.lie_type == LieType::B) pj += (lj <= k) ? 1 : 0;
            p[static_cast<std::size_t>(j - 1)] = pj;
        }
    } else {
        for (int j = 1; j <= m; ++j) {
            int lj = label.part(j);
            int count = 0;
            for (int i = 1; i < j; ++i) {
                if (label.part(i) + lj <= 2 * k - 1 + j - i) ++count;
            }
            bool first_k_part = lj == k && (j == 1 || label.part(j - 1) > k);
            int shift;
            if (lj > k || (first_k_part && (n + j + label.type) % 2 == 0))
                shift = 1;
            else
                shift = 2;
            p[static_cast<std::size_t>(j - 1)] = n + k - lj + count + shift;
        }
    }
    IndexSet P{std::move(p)};
    if (!is_valid_index_set(spec, P))
        throw std::logic_error("label_to_index_set: produced invalid index set for " +
                               to_string(label));
    return P;
}

SchubertLabel index_set_to_label(const GrassmannianSpec& spec, const IndexSet& P) {
    if (!is_valid_index_set(spec, P))
        throw std::invalid_argument("index_set_to_label: invalid index set");
    int m = spec.m, n = spec.n, k = spec.k;
    std::vector<int> parts(static_cast<std::size_t>(m));
    int type = 0;
    if (!spec.is_even_orthogonal()) {
        // Type B indices reduce to type C indices by undoing the +1 shift
        // applied to entries above the middle.
        std::vector<int> q = P.entries;
        if (spec.lie_type == LieType::B) {
            for (int& v : q) {
                if (v > n + 1) v -= 1;
            }
        }
        for (int j = 1; j <= m; ++j) {
            int pj = q[static_cast<std::size_t>(j - 1)];
            int count = 0;
            for (int i = 1; i < j; ++i) {
                if (q[static_cast<std::size_t>(i - 1)] + pj > 2 * n + 1) ++count;
            }
            parts[static_cast<std::size_t>(j - 1)] = n + k + 1 - pj + count;
        }
    } else {
        bool middle = false;
        int below_middle_missing = 0;
        for (int j = 1; j <= m; ++j) {
            int pj = P.entries[static_cast<std::size_t>(j - 1)];
            if (pj == n + 1 || pj == n + 2) middle = true;
            if (pj <= n + 1) {
                parts[static_cast<std::size_t>(j - 1)] = n + k + 1 - pj;
            } else {
                int count = 0;
                for (int i = 1; i < j; ++i) {
                    if (P.entries[static_cast<std::size_t>(i - 1)] + pj > 2 * n + 3) ++count;
                }
                parts[static_cast<std::size_t>(j - 1)] = n + k + 2 - pj + count;
            }
        }
        if (middle) {
            int present = 0;
            for (int v : P.entries) {
                if (v <= n + 1) ++present;
            }
            below_middle_missing = (n + 1) - present;
            type = 1 + (below_middle_missing % 2);
        }
    }
    SchubertLabel label = make_label(std::move(parts), type);
    if (!validate_label(spec, label))
        throw std::logic_error("index_set_to_label: produced invalid label");
    return label;
}

SchubertLabel dual(const GrassmannianSpec& spec, const SchubertLabel& label) {
    IndexSet P = label_to_index_set(spec, label);
    int N = spec.ambient_N;
    std::vector<int> q;
    q.reserve(P.entries.size());
    for (int v : P.entries) {
        bool middle = spec.is_even_orthogonal() && (v == spec.n + 1 || v == spec.n + 2);
        if (middle && spec.n % 2 == 0) {
            q.push_back(v);
        } else {
            q.push_back(N + 1 - v);
        }
    }
    std::sort(q.begin(), q.end());
    return index_set_to_label(spec, IndexSet{std::move(q)});
}

bool k_related(const Box& a, const Box& b, int k, RelatedConvention conv) {
    // Doubled to keep the D center (2k+1)/2 integral.
    int center2 = conv == RelatedConvention::BC ? 2 * (k + 1) : 2 * k + 1;
    return std::abs(2 * a.col - center2) + 2 * a.row ==
           std::abs(2 * b.col - center2) + 2 * b.row;
}

SchubertLabel partition_pair_to_label(const PartitionPair& pair, int k) {
    if (!is_partition_shape(pair.alpha) && !pair.alpha.empty())
        throw std::invalid_argument("partition_pair_to_label: alpha is not a partition");
    if (!is_partition_shape(pair.beta) && !pair.beta.empty())
        throw std::invalid_argument("partition_pair_to_label: beta is not a partition");
    if (static_cast<int>(pair.alpha.size()) > k)
        throw std::invalid_argument("partition_pair_to_label: alpha has more than k parts");
    for (std::size_t i = 1; i < pair.beta.size(); ++i) {
        if (pair.beta[i] >= pair.beta[i - 1])
            throw std::invalid_argument("partition_pair_to_label: beta is not strict");
    }
    std::vector<int> ac = conjugate(pair.alpha);
    std::size_t rows = std::max(ac.size(), pair.beta.size());
    std::vector<int> parts(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        int a = i < ac.size() ? ac[i] : 0;
        int b = i < pair.beta.size() ? pair.beta[i] : 0;
        parts[i] = a + b;
    }
    return make_label(std::move(parts));
}

int ell_k(const SchubertLabel& label, int k) {
    int c = 0;
    for (int p : label.parts) {
        if (p > k) ++c;
    }
    return c;
}

int column_height(const std::vector<int>& parts, int col) {
    int h = 0;
    for (int p : parts) {
        if (p >= col) ++h;
        else break;
    }
    return h;
}

std::vector<int> conjugate(const std::vector<int>& parts) {
    if (parts.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts[0]), 0);
    for (std::size_t c = 0; c < out.size(); ++c) {
        out[c] = column_height(parts, static_cast<int>(c) + 1);
    }
    return out;
}

bool contains_partition(const std::vector<int>& outer, const std::vector<int>& inner) {
    for (std::size_t i = 0; i < inner.size(); ++i) {
        int o = i < outer.size() ? outer[i] : 0;
        if (o < inner[i]) return false;
    }
    return true;
}

std::vector<int> staircase(int d) {
    std::vector<int> out;
    for (int i = d; i >= 1; --i) out.push_back(i);
    return out;
}

SchubertLabel parse_label(const std::string& text) {
    std::string body = text;
    int type = 0;
    auto colon = body.find(':');
    if (colon != std::string::npos) {
        std::string t = body.substr(colon + 1);
        body = body.substr(0, colon);
        if (t != "0" && t != "1" && t != "2")
            throw std::invalid_argument("parse_label: type must be 0, 1 or 2");
        type = t[0] - '0';
    }
    std::vector<int> parts;
    if (body != "-" && !body.empty()) {
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t next = body.find(',', pos);
            std::string tok = body.substr(pos, next == std::string::npos ? std::string::npos
                                                                         : next - pos);
            if (tok.empty()) throw std::invalid_argument("parse_label: empty part in \"" + text + "\"");
            for (char ch : tok) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("parse_label: bad part \"" + tok + "\"");
            }
            parts.push_back(std::atoi(tok.c_str()));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else if (body.empty()) {
        throw std::invalid_argument("parse_label: empty partition is spelled \"-\"");
    }
    SchubertLabel label = make_label(std::move(parts), type);
    if (!is_partition_shape(label.parts) && !label.parts.empty())
        throw std::invalid_argument("parse_label: parts must be weakly decreasing and positive");
    return label;
}

std::string to_string(const SchubertLabel& label) {
    std::string s;
    if (label.parts.empty()) {
        s = "-";
    } else {
        for (std::size_t i = 0; i < label.parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(label.parts[i]);
        }
    }
    if (label.type != 0) s += ":" + std::to_string(label.type);
    return s;
}

std::string to_string(const IndexSet& P) {
    std::string s;
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(P.entries[i]);
    }
    return s;
}

}  // namespace grassq
