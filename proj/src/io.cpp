#include "biatsp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "biatsp/errors.hpp"

namespace biatsp {

namespace {

std::string tour_to_string(const Tour& t) {
    std::string out;
    bool first = true;
    for (int v : t.order()) {
        if (!first) out.push_back('-');
        out += std::to_string(v);
        first = false;
    }
    return out;
}

Tour tour_from_string(const std::string& text) {
    std::vector<int> order;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t dash = std::min(text.find('-', pos), text.size());
        try {
            order.push_back(std::stoi(text.substr(pos, dash - pos)));
        } catch (const std::exception&) {
            throw input_error("front csv: bad tour token in '" + text + "'");
        }
        pos = dash + 1;
    }
    if (order.empty() || order[0] != 0)
        throw input_error("front csv: tour must start at vertex 0");
    Tour t = Tour::from_order(order);
    if (!t.valid()) throw input_error("front csv: tour is not a Hamiltonian circuit");
    return t;
}

std::string format_pct(double pct) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", pct);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t comma = std::min(line.find(',', pos), line.size());
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

}  // namespace

std::string front_to_csv(const Front& front) {
    Front sorted = front;
    sorted.sort_canonical();
    std::string out = "d1,d2,tour\n";
    for (const auto& e : sorted.entries) {
        out += std::to_string(e.value.d1);
        out.push_back(',');
        out += std::to_string(e.value.d2);
        out.push_back(',');
        if (e.tour) out += tour_to_string(*e.tour);
        out.push_back('\n');
    }
    return out;
}

Front front_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw input_error("front csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "d1,d2,tour")
        throw input_error("front csv: expected header 'd1,d2,tour', got '" + line + "'");

    Front front;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw input_error("front csv line " + std::to_string(line_no) + ": need 3 fields");
        FrontEntry entry;
        try {
            entry.value.d1 = std::stoll(fields[0]);
            entry.value.d2 = std::stoll(fields[1]);
        } catch (const std::exception&) {
            throw input_error("front csv line " + std::to_string(line_no) + ": bad weights");
        }
        if (!fields[2].empty()) entry.tour = tour_from_string(fields[2]);
        front.entries.push_back(std::move(entry));
    }
    try {
        front.check();
    } catch (const std::exception& e) {
        throw input_error(std::string("front csv: ") + e.what());
    }
    front.sort_canonical();
    return front;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "case,theta12,theta21,n_before,n_after,excluded_pct\n";
    for (const auto& r : rows) {
        out += r.scenario;
        out.push_back(',');
        if (r.theta12) out += r.theta12->str();
        out.push_back(',');
        if (r.theta21) out += r.theta21->str();
        out.push_back(',');
        out += std::to_string(r.n_before);
        out.push_back(',');
        out += std::to_string(r.n_after);
        out.push_back(',');
        out += format_pct(r.excluded_pct);
        out.push_back('\n');
    }
    return out;
}

namespace {

nlohmann::json matrix_to_json(const WeightMatrix& w) {
    nlohmann::json rows = nlohmann::json::array();
    for (int u = 0; u < w.n(); ++u) {
        nlohmann::json row = nlohmann::json::array();
        for (int v = 0; v < w.n(); ++v) row.push_back(w(u, v));
        rows.push_back(std::move(row));
    }
    return rows;
}

WeightMatrix matrix_from_json(const nlohmann::json& rows, int n, const char* label) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw input_error(std::string("instance json: ") + label + " must be an n x n array");
    WeightMatrix w(n);
    for (int u = 0; u < n; ++u) {
        const auto& row = rows[u];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw input_error(std::string("instance json: ") + label + " row has wrong length");
        for (int v = 0; v < n; ++v) {
            if (u == v) {
                w(u, v) = kDiagonalSentinel;
                continue;
            }
            if (!row[v].is_number_integer())
                throw input_error(std::string("instance json: ") + label + " has a non-integer");
            w(u, v) = row[v].get<std::int64_t>();
        }
    }
    return w;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    nlohmann::ordered_json j;
    j["name"] = inst.name;
    j["n"] = inst.n;
    j["w1"] = matrix_to_json(inst.w1);
    j["w2"] = inst.has_second_criterion() ? matrix_to_json(inst.w2) : nlohmann::json();
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("instance json: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw input_error("instance json: missing integer field 'n'");
    Instance inst;
    inst.n = j["n"].get<int>();
    inst.name = j.value("name", std::string("unnamed"));
    if (!j.contains("w1")) throw input_error("instance json: missing 'w1'");
    inst.w1 = matrix_from_json(j["w1"], inst.n, "w1");
    if (j.contains("w2") && !j["w2"].is_null())
        inst.w2 = matrix_from_json(j["w2"], inst.n, "w2");
    try {
        inst.check();
    } catch (const std::exception& e) {
        throw input_error(std::string("instance json: ") + e.what());
    }
    return inst;
}

std::string report_to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"population_size", report.config.population_size},
        {"iterations", report.config.iterations},
        {"tournament_size", report.config.tournament_size},
        {"mutation_probability", report.config.mutation_probability},
        {"crossover", report.config.crossover == Crossover::kDec ? "dec" : "dpx"},
        {"seed", report.config.seed},
    };
    j["instance"] = report.instance_name;
    j["iterations"] = report.iterations;
    j["initial_front_size"] = report.initial_front_size;
    nlohmann::ordered_json front = nlohmann::ordered_json::array();
    for (const auto& e : report.front.entries) {
        nlohmann::ordered_json entry;
        entry["d1"] = e.value.d1;
        entry["d2"] = e.value.d2;
        entry["tour"] = e.tour ? tour_to_string(*e.tour) : "";
        front.push_back(std::move(entry));
    }
    j["front"] = std::move(front);
    j["gd_trace"] = report.gd_trace;
    j["igd_trace"] = report.igd_trace;
    if (!report.gd_trace.empty()) {
        j["final_gd"] = report.gd_trace.back();
        j["final_igd"] = report.igd_trace.back();
    } else {
        j["final_gd"] = nullptr;
        j["final_igd"] = nullptr;
    }
    j["wall_ms"] = report.wall_ms;
    return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot open for writing: " + tmp.string());
        out << content;
        if (!out.flush()) throw input_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_front_csv(const Front& front, const std::filesystem::path& path) {
    write_text_file(path, front_to_csv(front));
}

Front read_front_csv(const std::filesystem::path& path) {
    return front_from_csv(read_text_file(path));
}

void write_instance_json(const Instance& inst, const std::filesystem::path& path) {
    write_text_file(path, instance_to_json(inst));
}

Instance read_instance_json(const std::filesystem::path& path) {
    return instance_from_json(read_text_file(path));
}

}  // namespace biatsp
