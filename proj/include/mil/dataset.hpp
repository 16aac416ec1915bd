#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mil/matrix.hpp"

namespace mil {

using Instance = std::vector<double>;

struct Bag {
    std::string id;
    int label = 0;  // 0 or 1
    std::vector<Instance> instances;
};

struct Dataset {
    std::string name;
    std::size_t dim = 0;
    std::vector<Bag> bags;

    std::size_t total_instances() const {
        std::size_t n = 0;
        for (const auto& b : bags) n += b.instances.size();
        return n;
    }
    std::size_t positive_bags() const {
        std::size_t n = 0;
        for (const auto& b : bags) n += b.label == 1;
        return n;
    }
    std::size_t negative_bags() const { return bags.size() - positive_bags(); }

    const Bag* find_bag(std::string_view id) const {
        for (const auto& b : bags)
            if (b.id == id) return &b;
        return nullptr;
    }
};

/// Structured parse failure; line is 1-based and includes the header line.
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Checks the Dataset invariants: unique bag ids, non-empty bags, binary
/// labels, constant dimensionality, finite features.
inline void validate(const Dataset& ds) {
    if (ds.dim == 0) throw std::invalid_argument("dataset has zero dimensionality");
    std::unordered_map<std::string_view, int> seen;
    for (const auto& bag : ds.bags) {
        if (!seen.emplace(bag.id, 1).second)
            throw std::invalid_argument("duplicate bag id: " + bag.id);
        if (bag.instances.empty())
            throw std::invalid_argument("bag " + bag.id + " has no instances");
        if (bag.label != 0 && bag.label != 1)
            throw std::invalid_argument("bag " + bag.id + " has non-binary label");
        for (const auto& inst : bag.instances) {
            if (inst.size() != ds.dim)
                throw std::invalid_argument("bag " + bag.id + " has instance of wrong dimension");
            for (double v : inst)
                if (!std::isfinite(v))
                    throw std::invalid_argument("bag " + bag.id + " has non-finite feature");
        }
    }
}

inline void require_training_classes(const Dataset& ds) {
    if (ds.bags.empty()) throw std::invalid_argument("dataset has no bags");
    if (ds.positive_bags() == 0 || ds.negative_bags() == 0)
        throw std::invalid_argument("training dataset needs both a positive and a negative bag");
}

namespace detail {

inline std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline bool parse_double(std::string_view tok, double& out) {
    tok = trim(tok);
    if (tok.empty()) return false;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

/// Shortest representation that round-trips exactly through from_chars.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace detail

/// Reads the dataset CSV format: header `bag_id,label,f1,...,fd`, one instance
/// per row, label identical across the rows of a bag. Rows of one bag need not
/// be contiguous; row order within a bag is preserved and bags appear in order
/// of first occurrence.
inline Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "empty file: " + path);
    auto header = detail::split_line(line);
    if (header.size() < 3)
        throw ParseError(1, "header must be bag_id,label,f1,...,fd");
    if (detail::trim(header[0]) != "bag_id" || detail::trim(header[1]) != "label")
        throw ParseError(1, "header must start with bag_id,label");
    const std::size_t dim = header.size() - 2;

    Dataset ds;
    ds.dim = dim;
    {
        // dataset name from the file stem
        std::size_t slash = path.find_last_of("/\\");
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        std::size_t dot = base.find_last_of('.');
        ds.name = dot == std::string::npos ? base : base.substr(0, dot);
    }

    std::unordered_map<std::string, std::size_t> bag_pos;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        auto tokens = detail::split_line(line);
        if (tokens.size() != dim + 2)
            throw ParseError(lineno, "expected " + std::to_string(dim + 2) + " columns, got " +
                                         std::to_string(tokens.size()));
        std::string id(detail::trim(tokens[0]));
        if (id.empty()) throw ParseError(lineno, "empty bag_id");

        auto label_tok = detail::trim(tokens[1]);
        int label;
        if (label_tok == "0")
            label = 0;
        else if (label_tok == "1")
            label = 1;
        else
            throw ParseError(lineno, "label must be 0 or 1, got '" + std::string(label_tok) + "'");

        Instance inst(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!detail::parse_double(tokens[j + 2], inst[j]))
                throw ParseError(lineno, "malformed feature in column " + std::to_string(j + 3));
            if (!std::isfinite(inst[j]))
                throw ParseError(lineno, "non-finite feature in column " + std::to_string(j + 3));
        }

        auto it = bag_pos.find(id);
        if (it == bag_pos.end()) {
            bag_pos.emplace(id, ds.bags.size());
            ds.bags.push_back(Bag{id, label, {std::move(inst)}});
        } else {
            Bag& bag = ds.bags[it->second];
            if (bag.label != label)
                throw ParseError(lineno, "bag " + id + " has inconsistent labels");
            bag.instances.push_back(std::move(inst));
        }
    }
    if (ds.bags.empty()) throw ParseError(lineno, "no data rows");
    validate(ds);
    return ds;
}

inline void write_dataset(const Dataset& ds, std::ostream& out) {
    out << "bag_id,label";
    for (std::size_t j = 1; j <= ds.dim; ++j) out << ",f" << j;
    out << '\n';
    for (const auto& bag : ds.bags)
        for (const auto& inst : bag.instances) {
            out << bag.id << ',' << bag.label;
            for (double v : inst) out << ',' << detail::format_double(v);
            out << '\n';
        }
}

inline void write_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_dataset(ds, out);
}

/// Table-style summary used by the `inspect` command.
inline std::string dataset_summary(const Dataset& ds) {
    std::size_t min_inst = std::numeric_limits<std::size_t>::max();
    std::size_t max_inst = 0;
    for (const auto& bag : ds.bags) {
        min_inst = std::min(min_inst, bag.instances.size());
        max_inst = std::max(max_inst, bag.instances.size());
    }
    std::ostringstream os;
    os << "dataset: " << ds.name << '\n'
       << "bags: " << ds.bags.size() << " (" << ds.positive_bags() << " positive, "
       << ds.negative_bags() << " negative)" << '\n'
       << "instances: " << ds.total_instances() << '\n'
       << "instances per bag: " << min_inst << " to " << max_inst << '\n'
       << "features: " << ds.dim << '\n';
    return os.str();
}

/// Instances of all bags flattened in dataset order, with bag bookkeeping.
struct PooledInstances {
    Matrix x;
    std::vector<std::size_t> bag_of_row;   // row -> index into bags
    std::vector<std::size_t> bag_offset;   // bag -> first row; size bags+1
    std::vector<int> bag_label;
};

inline PooledInstances pool_instances(const Dataset& ds) {
    PooledInstances pooled;
    const std::size_t n = ds.total_instances();
    pooled.x = Matrix(n, ds.dim);
    pooled.bag_of_row.resize(n);
    pooled.bag_offset.reserve(ds.bags.size() + 1);
    std::size_t row = 0;
    for (std::size_t b = 0; b < ds.bags.size(); ++b) {
        pooled.bag_offset.push_back(row);
        pooled.bag_label.push_back(ds.bags[b].label);
        for (const auto& inst : ds.bags[b].instances) {
            for (std::size_t j = 0; j < ds.dim; ++j) pooled.x(row, j) = inst[j];
            pooled.bag_of_row[row] = b;
            ++row;
        }
    }
    pooled.bag_offset.push_back(row);
    return pooled;
}

}  // namespace mil
