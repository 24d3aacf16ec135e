// Copyright 2026 The lacc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lacc/pauli_algebra/clifford_1q.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace lacc {

namespace {

using Mat = std::array<std::complex<double>, 4>;

Mat matmul(const Mat &a, const Mat &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// Signed single-qubit Pauli composition in the i^k X^x Z^z picture.
// Returns (a*b) as i^phase * X^x Z^z packed with phase in bits 3..4.
struct Phased {
    unsigned phase;  // power of i
    bool x, z;
};

Phased to_phased(SignedPauli1 p) {
    unsigned phase = (p.x() && p.z() ? 1 : 0) + (p.negative() ? 2 : 0);
    return {phase & 3, p.x(), p.z()};
}

Phased mul(Phased a, Phased b) {
    unsigned phase = a.phase + b.phase + ((a.z && b.x) ? 2 : 0);
    return {phase & 3, a.x != b.x, a.z != b.z};
}

SignedPauli1 to_signed(Phased p) {
    unsigned d = (p.phase + 4 - (p.x && p.z ? 1 : 0)) & 3;
    if (d & 1) {
        throw std::logic_error("Clifford1Q: non-Hermitian image");
    }
    uint8_t bits = (uint8_t)((p.x ? 1 : 0) | (p.z ? 2 : 0) | ((d == 2) ? 4 : 0));
    return SignedPauli1{bits};
}

struct Element {
    SignedPauli1 ix, iz, iy;
    Mat u;
    std::string name;
};

struct Table {
    std::vector<Element> elems;
    uint8_t compose[24][24];
    uint8_t inv[24];
    std::map<std::string, uint8_t> by_name;

    int find(SignedPauli1 ix, SignedPauli1 iz) const {
        for (size_t k = 0; k < elems.size(); k++) {
            if (elems[k].ix.bits == ix.bits && elems[k].iz.bits == iz.bits) {
                return (int)k;
            }
        }
        return -1;
    }
};

// Image of signed Pauli p under the Clifford with images (ix, iz).
SignedPauli1 apply(const SignedPauli1 &ix, const SignedPauli1 &iz, SignedPauli1 p) {
    Phased acc{(unsigned)((p.x() && p.z() ? 1 : 0) + (p.negative() ? 2 : 0)) & 3, false, false};
    if (p.x()) {
        acc = mul(acc, to_phased(ix));
    }
    if (p.z()) {
        acc = mul(acc, to_phased(iz));
    }
    return to_signed(acc);
}

const SignedPauli1 kX{1}, kZ{2}, kY{3};

Table build_table() {
    Table t;
    const double r = 1.0 / std::sqrt(2.0);
    const std::complex<double> i(0, 1);
    Mat mh = {r, r, r, -r};
    Mat ms = {1, 0, 0, i};
    struct Gen {
        SignedPauli1 ix, iz;
        Mat u;
    };
    Gen gh{kZ, kX, mh};
    Gen gs{kY, kZ, ms};

    // Breadth-first enumeration over words in H and S.
    t.elems.push_back({kX, kZ, kY, {1, 0, 0, 1}, ""});
    std::vector<std::string> words = {""};
    for (size_t head = 0; head < t.elems.size(); head++) {
        for (int g = 0; g < 2; g++) {
            const Gen &gen = g == 0 ? gh : gs;
            Element cur = t.elems[head];
            // Apply cur first, then gen: image = gen(cur(P)).
            SignedPauli1 nx = apply(gen.ix, gen.iz, cur.ix);
            SignedPauli1 nz = apply(gen.ix, gen.iz, cur.iz);
            if (t.find(nx, nz) >= 0) {
                continue;
            }
            Element e;
            e.ix = nx;
            e.iz = nz;
            e.iy = apply(nx, nz, kY);
            e.u = matmul(gen.u, cur.u);
            std::string w = words[head];
            w += (w.empty() ? "" : "+");
            w += (g == 0 ? "H" : "S");
            e.name = w;
            words.push_back(w);
            t.elems.push_back(e);
        }
    }
    if (t.elems.size() != 24) {
        throw std::logic_error("Clifford1Q: enumeration did not produce 24 elements");
    }

    struct Named {
        const char *name;
        SignedPauli1 ix, iz;
    };
    const SignedPauli1 mX{5}, mZ{6}, mY{7};
    const Named named[] = {
        {"I", kX, kZ},        {"X", kX, mZ},       {"Y", mX, mZ},       {"Z", mX, kZ},
        {"H", kZ, kX},        {"S", kY, kZ},       {"S_DAG", mY, kZ},   {"SQRT_X", kX, mY},
        {"SQRT_X_DAG", kX, kY}, {"SQRT_Y", mZ, kX}, {"SQRT_Y_DAG", kZ, mX}, {"H_XY", kY, mZ},
        {"H_YZ", mX, kY},     {"C_XYZ", kY, kX},   {"C_ZYX", kZ, kY},
    };
    for (const auto &nm : named) {
        int k = t.find(nm.ix, nm.iz);
        if (k < 0) {
            throw std::logic_error("Clifford1Q: named element missing");
        }
        t.elems[k].name = nm.name;
    }
    for (size_t k = 0; k < 24; k++) {
        t.by_name[t.elems[k].name] = (uint8_t)k;
    }
    for (size_t a = 0; a < 24; a++) {
        for (size_t b = 0; b < 24; b++) {
            const Element &ea = t.elems[a];
            const Element &eb = t.elems[b];
            SignedPauli1 nx = apply(eb.ix, eb.iz, ea.ix);
            SignedPauli1 nz = apply(eb.ix, eb.iz, ea.iz);
            t.compose[a][b] = (uint8_t)t.find(nx, nz);
        }
    }
    for (size_t a = 0; a < 24; a++) {
        for (size_t b = 0; b < 24; b++) {
            if (t.compose[a][b] == 0) {
                t.inv[a] = (uint8_t)b;
            }
        }
    }
    return t;
}

const Table &table() {
    static const Table t = build_table();
    return t;
}

}  // namespace

char SignedPauli1::letter() const {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    return letters[bits & 3];
}

Clifford1Q Clifford1Q::from_index(uint8_t index) {
    if (index >= kCount) {
        throw std::out_of_range("Clifford1Q: index out of range");
    }
    return Clifford1Q(index);
}

Clifford1Q Clifford1Q::from_name(std::string_view name) {
    const Table &t = table();
    Clifford1Q result;
    size_t start = 0;
    while (start <= name.size()) {
        size_t end = name.find('+', start);
        if (end == std::string_view::npos) {
            end = name.size();
        }
        std::string part(name.substr(start, end - start));
        auto it = t.by_name.find(part);
        if (it == t.by_name.end()) {
            throw std::invalid_argument("Clifford1Q: unknown gate name '" + part + "'");
        }
        result = result.then(Clifford1Q(it->second));
        start = end + 1;
    }
    return result;
}

Clifford1Q Clifford1Q::I() {
    return Clifford1Q(0);
}
Clifford1Q Clifford1Q::X() {
    return from_name("X");
}
Clifford1Q Clifford1Q::Y() {
    return from_name("Y");
}
Clifford1Q Clifford1Q::Z() {
    return from_name("Z");
}
Clifford1Q Clifford1Q::H() {
    return from_name("H");
}
Clifford1Q Clifford1Q::S() {
    return from_name("S");
}
Clifford1Q Clifford1Q::S_DAG() {
    return from_name("S_DAG");
}
Clifford1Q Clifford1Q::SQRT_X() {
    return from_name("SQRT_X");
}
Clifford1Q Clifford1Q::SQRT_X_DAG() {
    return from_name("SQRT_X_DAG");
}

const std::string &Clifford1Q::name() const {
    return table().elems[index_].name;
}

Clifford1Q Clifford1Q::then(Clifford1Q next) const {
    return Clifford1Q(table().compose[index_][next.index_]);
}

Clifford1Q Clifford1Q::inverse() const {
    return Clifford1Q(table().inv[index_]);
}

SignedPauli1 Clifford1Q::image_x() const {
    return table().elems[index_].ix;
}
SignedPauli1 Clifford1Q::image_y() const {
    return table().elems[index_].iy;
}
SignedPauli1 Clifford1Q::image_z() const {
    return table().elems[index_].iz;
}

bool Clifford1Q::is_pauli() const {
    return (image_x().bits & 3) == 1 && (image_z().bits & 3) == 2;
}

std::array<std::complex<double>, 4> Clifford1Q::unitary() const {
    return table().elems[index_].u;
}

}  // namespace lacc
