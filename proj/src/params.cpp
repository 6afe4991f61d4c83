#include "gfdn/params.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace gfdn {

using nlohmann::json;

double t60_to_absorption_gain(double t60, double delay_m, double fs) {
    if (t60 <= 0.0) throw std::invalid_argument("t60_to_absorption_gain: t60 must be > 0");
    if (fs <= 0.0) throw std::invalid_argument("t60_to_absorption_gain: fs must be > 0");
    if (delay_m < 1.0)
        throw std::invalid_argument("t60_to_absorption_gain: delay must be >= 1 sample");
    return std::exp(-6.91 * delay_m / (fs * t60));
}

double t60_to_absorption_gain_db(double t60, double delay_m, double fs) {
    if (t60 <= 0.0 || fs <= 0.0)
        throw std::invalid_argument("t60_to_absorption_gain_db: t60 and fs must be > 0");
    return -60.0 * delay_m / (fs * t60);
}

double GFDNParams::line_attenuation(int line) const {
    const int k = topology.group_of(line);
    return std::pow(absorption_gains[k], topology.delay_lengths[line]);
}

double GFDNParams::input_tap(int line) const {
    return input_gains[line] * source_gains[topology.group_of(line)];
}

double GFDNParams::output_tap(int line) const {
    return output_gains[line] * receiver_gains[topology.group_of(line)];
}

void GFDNParams::validate() const {
    topology.validate();
    const int N = topology.total_delays();
    const int G = topology.num_groups;
    if (feedback.assembled.rows() != N || feedback.assembled.cols() != N)
        throw std::invalid_argument("params: feedback matrix size mismatch");
    if (feedback.num_groups() != G || feedback.block_size() != topology.delays_per_group)
        throw std::invalid_argument("params: feedback block structure mismatch");
    if (static_cast<int>(input_gains.size()) != N ||
        static_cast<int>(output_gains.size()) != N)
        throw std::invalid_argument("params: input/output gains must have length N");
    if (static_cast<int>(absorption_gains.size()) != G)
        throw std::invalid_argument("params: one absorption gain per group required");
    if (static_cast<int>(source_gains.size()) != G ||
        static_cast<int>(receiver_gains.size()) != G)
        throw std::invalid_argument("params: source/receiver gains must have length G");
    for (double g : absorption_gains)
        if (!(g > 0.0) || g > 1.0)
            throw std::invalid_argument("params: absorption gains must be in (0, 1]");
}

void SubbandNetworkBank::validate() const {
    if (networks.empty()) throw std::invalid_argument("bank: no networks");
    if (center_freqs.size() != networks.size())
        throw std::invalid_argument("bank: one center frequency per network required");
    if (sample_rate <= 0.0) throw std::invalid_argument("bank: sample rate must be > 0");
    const auto& m0 = networks.front().topology.delay_lengths;
    for (const auto& net : networks) {
        net.validate();
        if (net.topology.delay_lengths != m0)
            throw std::invalid_argument("bank: all bands must share the delay lengths");
    }
}

GFDNParams make_params(const GroupTopology& topology, const FeedbackMatrix& feedback,
                       const std::vector<double>& input_gains,
                       const std::vector<double>& output_gains,
                       const std::vector<double>& t60_per_group, double fs) {
    GFDNParams p;
    p.topology = topology;
    p.feedback = feedback;
    p.input_gains = input_gains;
    p.output_gains = output_gains;
    p.absorption_gains.resize(topology.num_groups);
    for (int k = 0; k < topology.num_groups; ++k)
        p.absorption_gains[k] = t60_to_absorption_gain(t60_per_group[k], 1.0, fs);
    p.source_gains.assign(topology.num_groups, 1.0);
    p.receiver_gains.assign(topology.num_groups, 1.0);
    p.validate();
    return p;
}

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
    const auto rows = j.size();
    if (rows == 0) return {};
    const auto cols = j.at(0).size();
    Eigen::MatrixXd m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("json matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = j.at(i).at(c).get<double>();
    }
    return m;
}

json params_to_json_obj(const GFDNParams& p) {
    json j;
    j["topology"] = {{"num_groups", p.topology.num_groups},
                     {"delays_per_group", p.topology.delays_per_group},
                     {"delay_lengths", p.topology.delay_lengths}};
    json blocks = json::array();
    for (const auto& m : p.feedback.mixing_blocks) blocks.push_back(matrix_to_json(m));
    j["feedback"] = {{"kind", p.feedback.kind == FeedbackKind::block_diagonal
                                  ? "block_diagonal"
                                  : "coupled"},
                     {"mixing_blocks", std::move(blocks)},
                     {"coupling", matrix_to_json(p.feedback.coupling)}};
    j["input_gains"] = p.input_gains;
    j["output_gains"] = p.output_gains;
    j["absorption_gains"] = p.absorption_gains;
    j["source_gains"] = p.source_gains;
    j["receiver_gains"] = p.receiver_gains;
    j["direct_gain"] = p.direct_gain;
    return j;
}

GFDNParams params_from_json_obj(const json& j) {
    GFDNParams p;
    const auto& t = j.at("topology");
    p.topology.num_groups = t.at("num_groups").get<int>();
    p.topology.delays_per_group = t.at("delays_per_group").get<int>();
    p.topology.delay_lengths = t.at("delay_lengths").get<std::vector<int>>();

    const auto& fb = j.at("feedback");
    std::vector<Eigen::MatrixXd> blocks;
    for (const auto& b : fb.at("mixing_blocks")) blocks.push_back(matrix_from_json(b));
    p.feedback = assemble_feedback(matrix_from_json(fb.at("coupling")), blocks);

    p.input_gains = j.at("input_gains").get<std::vector<double>>();
    p.output_gains = j.at("output_gains").get<std::vector<double>>();
    p.absorption_gains = j.at("absorption_gains").get<std::vector<double>>();
    p.source_gains = j.at("source_gains").get<std::vector<double>>();
    p.receiver_gains = j.at("receiver_gains").get<std::vector<double>>();
    p.direct_gain = j.value("direct_gain", 0.0);
    p.validate();
    return p;
}

} // namespace

std::string params_to_json(const GFDNParams& p) {
    json j = params_to_json_obj(p);
    j["format_version"] = 1;
    return j.dump(2);
}

GFDNParams params_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("params json: unsupported format_version");
    return params_from_json_obj(j);
}

std::string bank_to_json(const SubbandNetworkBank& bank) {
    json j;
    j["format_version"] = 1;
    j["sample_rate"] = bank.sample_rate;
    j["center_freqs"] = bank.center_freqs;
    json nets = json::array();
    for (const auto& n : bank.networks) nets.push_back(params_to_json_obj(n));
    j["networks"] = std::move(nets);
    return j.dump(2);
}

SubbandNetworkBank bank_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.value("format_version", 0) != 1)
        throw std::invalid_argument("bank json: unsupported format_version");
    SubbandNetworkBank bank;
    bank.sample_rate = j.at("sample_rate").get<double>();
    bank.center_freqs = j.at("center_freqs").get<std::vector<double>>();
    for (const auto& n : j.at("networks")) bank.networks.push_back(params_from_json_obj(n));
    bank.validate();
    return bank;
}

} // namespace gfdn
