#include "biatsp/instance.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "biatsp/errors.hpp"
#include "biatsp/rng.hpp"

namespace biatsp {

std::int64_t WeightMatrix::max_off_diagonal() const {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v) best = std::max(best, (*this)(u, v));
    return best;
}

std::int64_t WeightMatrix::min_off_diagonal() const {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v) best = std::min(best, (*this)(u, v));
    return best;
}

namespace {

void check_matrix(const WeightMatrix& w, int n, const char* label) {
    if (w.n() != n) throw std::invalid_argument(std::string(label) + ": wrong dimension");
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) {
                if (w(u, v) != kDiagonalSentinel)
                    throw std::invalid_argument(std::string(label) + ": diagonal must be the sentinel");
            } else if (w(u, v) < 1) {
                throw std::invalid_argument(std::string(label) + ": off-diagonal weights must be >= 1");
            }
        }
    }
}

WeightMatrix random_matrix(int n, std::int64_t lo, std::int64_t hi, Rng& rng) {
    WeightMatrix w(n, kDiagonalSentinel);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) w(u, v) = rng.uniform_int(lo, hi);
    return w;
}

}  // namespace

void Instance::check() const {
    if (n < 3) throw std::invalid_argument("instance needs at least 3 vertices");
    check_matrix(w1, n, "w1");
    if (has_second_criterion()) check_matrix(w2, n, "w2");
}

ObjectiveVector evaluate(const Instance& inst, const Tour& tour) {
    if (tour.size() != inst.n || !tour.valid())
        throw std::invalid_argument("evaluate: not a Hamiltonian circuit on this instance");
    ObjectiveVector out;
    for (int v = 0; v < inst.n; ++v) {
        out.d1 += inst.w1(v, tour.succ[v]);
        out.d2 += inst.w2(v, tour.succ[v]);
    }
    return out;
}

Instance generate_random(int n, std::int64_t lo1, std::int64_t hi1, std::int64_t lo2,
                         std::int64_t hi2, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("generate_random: n must be >= 3");
    if (lo1 < 1 || lo1 > hi1 || lo2 < 1 || lo2 > hi2)
        throw std::invalid_argument("generate_random: ranges must satisfy 1 <= lo <= hi");
    Rng rng(seed);
    Instance inst;
    inst.n = n;
    inst.w1 = random_matrix(n, lo1, hi1, rng);
    inst.w2 = random_matrix(n, lo2, hi2, rng);
    std::ostringstream name;
    name << "S" << n << "[" << lo1 << "," << hi1 << "][" << lo2 << "," << hi2 << "]";
    inst.name = name.str();
    return inst;
}

Instance generate_contradicting(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("generate_contradicting: n must be >= 3");
    Rng rng(seed);
    Instance inst;
    inst.n = n;
    inst.w1 = random_matrix(n, 1, 2, rng);
    inst.w2 = WeightMatrix(n, kDiagonalSentinel);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) inst.w2(u, v) = 3 - inst.w1(u, v);
    inst.name = "S" + std::to_string(n) + "contr[1,2][1,2]";
    return inst;
}

Instance generate_ftv_derived(const Instance& base, std::uint64_t seed) {
    if (base.has_second_criterion())
        throw std::invalid_argument("generate_ftv_derived: base must carry a single criterion");
    Rng rng(seed);
    Instance inst;
    inst.n = base.n;
    inst.w1 = base.w1;
    inst.w2 = random_matrix(base.n, 1, base.w1.max_off_diagonal(), rng);
    inst.name = base.name + "rand";
    return inst;
}

namespace {

// "KEY : value" / "KEY: value" / bare "KEY".
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const auto colon = line.find(':');
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (colon == std::string::npos) {
        key = trim(line);
        value.clear();
    } else {
        key = trim(line.substr(0, colon));
        value = trim(line.substr(colon + 1));
    }
    return !key.empty();
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw input_error("tsplib line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Instance parse_tsplib(std::istream& in) {
    std::string line, key, value;
    std::string name = "unnamed";
    std::string type, ew_type, ew_format;
    int dimension = -1;
    int line_no = 0;
    bool in_weights = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!split_header(line, key, value)) continue;
        if (key == "EDGE_WEIGHT_SECTION") {
            in_weights = true;
            break;
        }
        if (key == "EOF") break;
        if (key == "NAME") name = value;
        else if (key == "TYPE") type = value;
        else if (key == "DIMENSION") {
            try {
                dimension = std::stoi(value);
            } catch (const std::exception&) {
                parse_fail(line_no, "DIMENSION is not an integer");
            }
        } else if (key == "EDGE_WEIGHT_TYPE") ew_type = value;
        else if (key == "EDGE_WEIGHT_FORMAT") ew_format = value;
        // other header keys (COMMENT, ...) are ignored
    }

    if (type != "ATSP") parse_fail(line_no, "TYPE must be ATSP, got '" + type + "'");
    if (dimension < 3) parse_fail(line_no, "missing or invalid DIMENSION");
    if (ew_type != "EXPLICIT") parse_fail(line_no, "EDGE_WEIGHT_TYPE must be EXPLICIT");
    if (ew_format != "FULL_MATRIX") parse_fail(line_no, "EDGE_WEIGHT_FORMAT must be FULL_MATRIX");
    if (!in_weights) parse_fail(line_no, "missing EDGE_WEIGHT_SECTION");

    const std::size_t want = static_cast<std::size_t>(dimension) * dimension;
    std::vector<std::int64_t> cells;
    cells.reserve(want);
    while (cells.size() < want && std::getline(in, line)) {
        ++line_no;
        if (line.find("EOF") != std::string::npos && cells.size() < want)
            parse_fail(line_no, "EOF before all matrix entries were read");
        std::istringstream row(line);
        std::int64_t x;
        while (row >> x) cells.push_back(x);
        if (!row.eof()) parse_fail(line_no, "non-numeric token in matrix");
        if (cells.size() > want) parse_fail(line_no, "too many matrix entries");
    }
    if (cells.size() != want)
        parse_fail(line_no, "expected " + std::to_string(want) + " matrix entries, got " +
                                std::to_string(cells.size()));

    Instance inst;
    inst.n = dimension;
    inst.name = name;
    inst.w1 = WeightMatrix(dimension);
    for (int u = 0; u < dimension; ++u) {
        for (int v = 0; v < dimension; ++v) {
            const std::int64_t w = cells[static_cast<std::size_t>(u) * dimension + v];
            if (u == v) {
                inst.w1(u, v) = kDiagonalSentinel;  // file diagonals are ignored
            } else {
                if (w < 1) parse_fail(line_no, "off-diagonal weight < 1");
                inst.w1(u, v) = w;
            }
        }
    }
    return inst;
}

}  // namespace biatsp
