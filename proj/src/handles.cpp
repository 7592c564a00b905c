#include "flashcodes/handles.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "flashcodes/traceio.hpp"

namespace flashcodes::handles {

namespace {

using verifier::SchemeHandle;
using verifier::SchemeKind;

std::optional<std::vector<int>> from_outcome(const WriteOutcome& out) {
    if (out.erased()) return std::nullopt;
    return out.state().levels;
}

staged::StagedState unflatten_staged(const staged::StagedConfig& cfg,
                                     const std::vector<int>& flat) {
    if (static_cast<int>(flat.size()) != cfg.n)
        throw ContractError("staged handle: flat state has wrong length");
    std::vector<int> parity(flat.begin(), flat.begin() + cfg.parity_cells);
    std::vector<int> index(flat.begin() + cfg.parity_cells, flat.end());
    return {CellVector(cfg.q, std::move(parity)), std::move(index)};
}

std::vector<int> flatten_staged(const staged::StagedState& st) {
    std::vector<int> flat = st.parity.levels;
    flat.insert(flat.end(), st.index.begin(), st.index.end());
    return flat;
}

constrate::ConstRateState unflatten_constrate(const constrate::ConstRateConfig& cfg,
                                              const std::vector<int>& flat) {
    if (static_cast<int>(flat.size()) != cfg.n)
        throw ContractError("constrate handle: flat state has wrong length");
    std::vector<int> index(flat.begin(), flat.begin() + (cfg.n - cfg.k));
    std::vector<int> parity(flat.begin() + (cfg.n - cfg.k), flat.end());
    return {CellVector(cfg.q, std::move(index)), CellVector(cfg.q, std::move(parity))};
}

std::vector<int> flatten_constrate(const constrate::ConstRateState& st) {
    std::vector<int> flat = st.index_group.levels;
    flat.insert(flat.end(), st.parity_group.levels.begin(), st.parity_group.levels.end());
    return flat;
}

}  // namespace

SchemeHandle make_twobit_handle(const twobit::TwoBitConfig& cfg) {
    SchemeHandle h;
    h.name = "twobit";
    h.kind = SchemeKind::flash;
    h.inputs = 2;
    h.initial = [cfg] { return CellVector::zeros(cfg.q, cfg.n).levels; };
    h.write = [cfg](const std::vector<int>& s, int input) {
        return from_outcome(twobit::encode(cfg, CellVector(cfg.q, s), input + 1));
    };
    h.decode = [cfg](const std::vector<int>& s) {
        return twobit::decode(cfg, CellVector(cfg.q, s));
    };
    h.serialize = [cfg](const std::vector<int>& s) {
        return twobit::serialize(cfg, CellVector(cfg.q, s));
    };
    h.parse = [cfg](const std::string& text) {
        auto [parsed_cfg, x] = twobit::parse(text);
        if (parsed_cfg.n != cfg.n || parsed_cfg.q != cfg.q)
            throw ContractError("twobit handle: state text for a different config");
        return x.levels;
    };
    return h;
}

SchemeHandle make_indexless_handle(const indexless::IndexlessConfig& cfg) {
    SchemeHandle h;
    h.name = "indexless";
    h.kind = SchemeKind::flash;
    h.inputs = cfg.k;
    h.initial = [cfg] { return CellVector::zeros(cfg.q, cfg.n).levels; };
    h.write = [cfg](const std::vector<int>& s, int input) {
        return from_outcome(indexless::encode(cfg, CellVector(cfg.q, s), input));
    };
    h.decode = [cfg](const std::vector<int>& s) {
        return indexless::decode(cfg, CellVector(cfg.q, s));
    };
    h.serialize = [cfg](const std::vector<int>& s) {
        return indexless::serialize(cfg, CellVector(cfg.q, s));
    };
    h.parse = [cfg](const std::string& text) {
        auto [parsed_cfg, x] = indexless::parse(text);
        if (parsed_cfg.n != cfg.n || parsed_cfg.k != cfg.k || parsed_cfg.q != cfg.q)
            throw ContractError("indexless handle: state text for a different config");
        return x.levels;
    };
    return h;
}

SchemeHandle make_staged_handle(const staged::StagedConfig& cfg) {
    SchemeHandle h;
    h.name = cfg.variant == staged::IndexVariant::per_stage ? "staged" : "staged-stacked";
    h.kind = SchemeKind::flash;
    h.inputs = cfg.k;
    h.initial = [cfg] { return flatten_staged(staged::initial_state(cfg)); };
    h.write = [cfg](const std::vector<int>& s, int input) -> std::optional<std::vector<int>> {
        staged::StagedOutcome out = staged::encode(cfg, unflatten_staged(cfg, s), input);
        if (out.erased()) return std::nullopt;
        return flatten_staged(out.state());
    };
    h.decode = [cfg](const std::vector<int>& s) {
        return staged::decode(cfg, unflatten_staged(cfg, s));
    };
    h.serialize = [cfg](const std::vector<int>& s) {
        return staged::serialize(cfg, unflatten_staged(cfg, s));
    };
    h.parse = [cfg](const std::string& text) {
        auto [parsed_cfg, st] = staged::parse(text);
        if (parsed_cfg.n != cfg.n || parsed_cfg.k != cfg.k || parsed_cfg.q != cfg.q ||
            parsed_cfg.variant != cfg.variant)
            throw ContractError("staged handle: state text for a different config");
        return flatten_staged(st);
    };
    return h;
}

SchemeHandle make_constrate_handle(const constrate::ConstRateConfig& cfg) {
    SchemeHandle h;
    h.name = "constrate";
    h.kind = SchemeKind::flash;
    h.inputs = cfg.k;
    h.initial = [cfg] { return flatten_constrate(constrate::initial_state(cfg)); };
    h.write = [cfg](const std::vector<int>& s, int input) -> std::optional<std::vector<int>> {
        constrate::ConstRateOutcome out =
            constrate::encode(cfg, unflatten_constrate(cfg, s), input);
        if (out.erased()) return std::nullopt;
        return flatten_constrate(out.state());
    };
    h.decode = [cfg](const std::vector<int>& s) {
        return constrate::decode(cfg, unflatten_constrate(cfg, s));
    };
    h.serialize = [cfg](const std::vector<int>& s) {
        return constrate::serialize(cfg, unflatten_constrate(cfg, s));
    };
    h.parse = [cfg](const std::string& text) {
        auto [parsed_cfg, st] = constrate::parse(text);
        if (parsed_cfg.n != cfg.n || parsed_cfg.k != cfg.k || parsed_cfg.q != cfg.q)
            throw ContractError("constrate handle: state text for a different config");
        return flatten_constrate(st);
    };
    return h;
}

SchemeHandle make_buffer_handle(const buffer::BufferConfig& cfg) {
    SchemeHandle h;
    h.name = "buffer";
    h.kind = SchemeKind::buffer;
    h.inputs = 2;
    h.initial = [cfg] { return buffer::initial_state(cfg).levels; };
    h.write = [cfg](const std::vector<int>& s, int input) {
        return from_outcome(buffer::encode(cfg, CellVector(cfg.q, s), input));
    };
    h.decode = [cfg](const std::vector<int>& s) {
        return buffer::decode(cfg, CellVector(cfg.q, s));
    };
    h.serialize = [cfg](const std::vector<int>& s) {
        return buffer::serialize(cfg, CellVector(cfg.q, s));
    };
    h.parse = [cfg](const std::string& text) {
        auto [parsed_cfg, x] = buffer::parse(text);
        if (parsed_cfg.n != cfg.n || parsed_cfg.q != cfg.q || parsed_cfg.r != cfg.r)
            throw ContractError("buffer handle: state text for a different config");
        return x.levels;
    };
    return h;
}

verifier::SchemeHandle handle_from_state_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw ContractError("state text: missing header line");
    std::string scheme = traceio::kv_str(traceio::parse_kv_line(header), "scheme");
    if (scheme == "twobit") return make_twobit_handle(twobit::parse(text).first);
    if (scheme == "indexless") return make_indexless_handle(indexless::parse(text).first);
    if (scheme == "staged") return make_staged_handle(staged::parse(text).first);
    if (scheme == "constrate") return make_constrate_handle(constrate::parse(text).first);
    if (scheme == "buffer") return make_buffer_handle(buffer::parse(text).first);
    throw ContractError("state text: unknown scheme '" + scheme + "'");
}

}  // namespace flashcodes::handles
