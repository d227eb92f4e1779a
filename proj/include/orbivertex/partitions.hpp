#pragma once

#include <compare>
#include <string>
#include <vector>

namespace orbivertex {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int operator[](int i) const { return i < length() ? parts[i] : 0; }
    Partition conjugate() const;
    bool contains(const Partition& o) const;
    // product of multiplicity factorials
    long aut() const;
    std::string str() const;

    auto operator<=>(const Partition&) const = default;
};

// all partitions of d, lexicographically decreasing: (d), (d-1,1), ...
std::vector<Partition> partitions_of(int d);
Partition parse_partition(const std::string& s);  // "4,3,3,1" or "" for empty

long factorial(int k);
long ipow(long b, int e);
long gcd_l(long a, long b);
long mod(long a, long n);

// a part d decorated with twist xi^i
struct Part {
    int size;
    int twist;
    auto operator<=>(const Part&) const = default;
};

// n-tuple of partitions; component i collects the parts of twist i.  Used both
// as a conjugacy class and as an irrep label of Z_n wr S_d.
class MultiPartition {
public:
    MultiPartition() : MultiPartition(1) {}
    explicit MultiPartition(int n);
    MultiPartition(int n, std::vector<Partition> comps);
    static MultiPartition from_parts(int n, const std::vector<Part>& parts);

    int n() const { return n_; }
    const std::vector<Partition>& comps() const { return comps_; }
    const Partition& operator[](int i) const { return comps_[i]; }

    // twist ascending, size descending within a twist
    std::vector<Part> parts() const;
    int size() const;
    int length() const;
    bool empty() const { return size() == 0; }
    bool untwisted() const;  // all parts twist 0

    Partition underlying() const;
    MultiPartition negate() const;
    MultiPartition tw() const;
    MultiPartition untw() const;  // (mu^0, empty, ..., empty)
    MultiPartition g(long k) const;
    MultiPartition operator+(const MultiPartition& o) const;  // disjoint union

    // multiplicities of equal decorated parts
    long aut() const;
    // centralizer order |Aut| * prod n d
    long z() const;

    std::string str() const;
    auto operator<=>(const MultiPartition&) const = default;

private:
    int n_;
    std::vector<Partition> comps_;
};

MultiPartition parse_multipartition(const std::string& s);
// all n-tuples of total size d, deterministic order
std::vector<MultiPartition> multipartitions_of(int n, int d);

// Ordering of decorated parts used by the invertibility argument: size
// descending, then twist mod gcd(size, n), then twist.
bool appendix_less(const Part& a, const Part& b, int n);
std::vector<Part> appendix_order(const MultiPartition& mu);
std::vector<int> twisting_partition(const MultiPartition& mu);
// mu with its first part in appendix order removed
MultiPartition drop_first(const MultiPartition& mu);

struct EtaData {
    Part first;
    int c;      // gcd(eta_1, n)
    int hbar1;  // h_1 mod c
    std::vector<int> sigma;
    int k;
};
// requires eta nonempty with every part twisted
EtaData eta_data(const MultiPartition& eta);

// Index sets of the invertibility matrix: all fully twisted eta with
// 1 <= |eta| <= d, and the rows (mu, k) built from them.
struct RowIndex {
    MultiPartition mu;
    int k;
    MultiPartition source;  // eta it was built from
    auto operator<=>(const RowIndex& o) const {
        if (auto c = mu <=> o.mu; c != 0) return c;
        return k <=> o.k;
    }
    bool operator==(const RowIndex& o) const { return mu == o.mu && k == o.k; }
};
std::vector<MultiPartition> b_set(int n, int d);
std::vector<RowIndex> c_set(int n, int d);
RowIndex row_from_eta(const MultiPartition& eta);

}  // namespace orbivertex
