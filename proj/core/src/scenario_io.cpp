#include "wsi/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace wsi {

namespace {

struct Record {
    int line = 0;
    std::string type;
    std::map<std::string, std::string> fields;
    std::set<std::string> consumed;
};

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.emplace_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

class Parser {
  public:
    Parser(std::string_view text, std::string origin) : origin_(std::move(origin)) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = text.find('\n', pos);
            std::string_view line =
                text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
            ++line_no;
            pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

            const std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            const std::vector<std::string> tokens = split_ws(line);
            if (tokens.empty()) {
                continue;
            }
            Record rec;
            rec.line = line_no;
            rec.type = tokens[0];
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const std::size_t eq = tokens[i].find('=');
                if (eq == std::string::npos || eq == 0) {
                    fail(rec.line, tokens[i], "expected key=value");
                }
                const std::string key = tokens[i].substr(0, eq);
                if (rec.fields.count(key) != 0) {
                    fail(rec.line, key, "duplicate key");
                }
                rec.fields[key] = tokens[i].substr(eq + 1);
            }
            records_.push_back(std::move(rec));
        }
    }

    ScenarioDoc parse() {
        ScenarioDoc doc;
        bool have_channel = false;
        bool have_seed = false;
        for (Record& rec : records_) {
            if (rec.type == "channel") {
                if (have_channel) {
                    fail(rec.line, "", "duplicate channel record");
                }
                have_channel = true;
                parse_channel(rec, doc.scenario.channel);
            } else if (rec.type == "node") {
                parse_node(rec, doc.scenario);
            } else if (rec.type == "link") {
                parse_link(rec, doc.scenario);
            } else if (rec.type == "sid") {
                doc.scenario.sids.push_back(require(rec, "id"));
                finish(rec);
            } else if (rec.type == "legit") {
                LegitReceiver lr;
                lr.node = require(rec, "node");
                lr.band = require(rec, "band");
                lr.max_interference_w = number(rec, "max_interference_w");
                doc.scenario.legit_receivers.push_back(std::move(lr));
                finish(rec);
            } else if (rec.type == "sweep") {
                if (doc.sweep.present) {
                    fail(rec.line, "", "duplicate sweep record");
                }
                parse_sweep(rec, doc.sweep);
            } else if (rec.type == "seed") {
                if (have_seed) {
                    fail(rec.line, "", "duplicate seed record");
                }
                have_seed = true;
                doc.seed = unsigned_number(rec, "value");
                finish(rec);
            } else {
                fail(rec.line, "", "unknown record type '" + rec.type + "'");
            }
        }

        std::set<std::string> bands;
        for (const SuspiciousLink& l : doc.scenario.links) {
            bands.insert(l.band);
        }
        for (const LegitReceiver& r : doc.scenario.legit_receivers) {
            bands.insert(r.band);
        }
        doc.scenario.bands.assign(bands.begin(), bands.end());

        try {
            doc.scenario.validate();
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(origin_, 0, "", e.what());
        }
        if (doc.sweep.present && doc.scenario.find_node(doc.sweep.node) == nullptr) {
            throw ScenarioError(origin_, 0, "node",
                                "sweep references unknown node '" + doc.sweep.node + "'");
        }
        return doc;
    }

  private:
    [[noreturn]] void fail(int line, const std::string& field, const std::string& msg) {
        throw ScenarioError(origin_, line, field, msg);
    }

    std::string require(Record& rec, const std::string& key) {
        auto it = rec.fields.find(key);
        if (it == rec.fields.end()) {
            fail(rec.line, key, "missing required key");
        }
        rec.consumed.insert(key);
        return it->second;
    }

    const std::string* optional(Record& rec, const std::string& key) {
        auto it = rec.fields.find(key);
        if (it == rec.fields.end()) {
            return nullptr;
        }
        rec.consumed.insert(key);
        return &it->second;
    }

    double to_double(Record& rec, const std::string& key, const std::string& value) {
        double v = 0.0;
        const char* begin = value.data();
        const char* end = value.data() + value.size();
        if (!value.empty() && value.front() == '+') {  // from_chars rejects a leading +
            ++begin;
        }
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end || value.empty()) {
            fail(rec.line, key, "not a number: '" + value + "'");
        }
        return v;
    }

    double number(Record& rec, const std::string& key) {
        return to_double(rec, key, require(rec, key));
    }

    std::uint64_t unsigned_number(Record& rec, const std::string& key) {
        const std::string value = require(rec, key);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            fail(rec.line, key, "not an unsigned integer: '" + value + "'");
        }
        return v;
    }

    /// Rejects any key that was never consumed, naming it.
    void finish(Record& rec) {
        for (const auto& [key, value] : rec.fields) {
            if (rec.consumed.count(key) == 0) {
                fail(rec.line, key, "unknown key '" + key + "'");
            }
        }
    }

    void parse_channel(Record& rec, ChannelModel& channel) {
        if (const std::string* v = optional(rec, "exponent")) {
            channel.pathloss_exponent = to_double(rec, "exponent", *v);
        }
        if (const std::string* v = optional(rec, "ref_loss_db")) {
            channel.reference_loss_db = to_double(rec, "ref_loss_db", *v);
        }
        if (const std::string* v = optional(rec, "ref_distance_m")) {
            channel.reference_distance_m = to_double(rec, "ref_distance_m", *v);
        }
        if (const std::string* v = optional(rec, "min_distance_m")) {
            channel.min_distance_m = to_double(rec, "min_distance_m", *v);
        }
        finish(rec);
    }

    void parse_node(Record& rec, Scenario& scenario) {
        Node node;
        node.id = require(rec, "id");
        const std::string role = require(rec, "role");
        if (role == "suspicious-tx") {
            node.role = Role::SuspiciousTx;
        } else if (role == "suspicious-rx") {
            node.role = Role::SuspiciousRx;
        } else if (role == "sid") {
            node.role = Role::Sid;
        } else if (role == "legitimate-rx") {
            node.role = Role::LegitimateRx;
        } else {
            fail(rec.line, "role", "unknown role '" + role + "'");
        }
        node.position.x = number(rec, "x");
        node.position.y = number(rec, "y");
        if (const std::string* v = optional(rec, "tx_dbm")) {
            node.tx_power_dbm = to_double(rec, "tx_dbm", *v);
        } else if (node.role == Role::SuspiciousTx) {
            fail(rec.line, "tx_dbm", "missing required key for role suspicious-tx");
        }
        if (const std::string* v = optional(rec, "noise_dbm")) {
            node.noise_power_dbm = to_double(rec, "noise_dbm", *v);
        }
        finish(rec);
        scenario.nodes.push_back(std::move(node));
    }

    void parse_link(Record& rec, Scenario& scenario) {
        SuspiciousLink link;
        link.tx = require(rec, "tx");
        link.rx = require(rec, "rx");
        link.band = require(rec, "band");
        if (const std::string* v = optional(rec, "id")) {
            link.id = *v;
        } else {
            link.id = link.tx + "->" + link.rx;
        }
        finish(rec);
        scenario.links.push_back(std::move(link));
    }

    void parse_sweep(Record& rec, SweepSpec& sweep) {
        sweep.present = true;
        const std::string experiment = require(rec, "experiment");
        if (experiment == "eavesdropping") {
            sweep.experiment = SweepExperiment::Eavesdropping;
        } else if (experiment == "spoofing") {
            sweep.experiment = SweepExperiment::Spoofing;
        } else {
            fail(rec.line, "experiment", "unknown experiment '" + experiment + "'");
        }
        sweep.node = require(rec, "node");
        const std::string coord = require(rec, "coord");
        if (coord != "x" && coord != "y") {
            fail(rec.line, "coord", "coord must be x or y");
        }
        sweep.coord = coord[0];
        sweep.from = number(rec, "from");
        sweep.to = number(rec, "to");
        sweep.step = number(rec, "step");
        if (!(sweep.step > 0.0)) {
            fail(rec.line, "step", "step must be > 0");
        }
        if (sweep.to < sweep.from) {
            fail(rec.line, "to", "sweep range must have to >= from");
        }
        finish(rec);
    }

    std::string origin_;
    std::vector<Record> records_;
};

}  // namespace

ScenarioDoc parse_scenario(std::string_view text, const std::string& origin) {
    return Parser(text, origin).parse();
}

ScenarioDoc load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ScenarioError(path, 0, "", "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), path);
}

}  // namespace wsi
