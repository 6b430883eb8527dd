#include "xreval/catalog.hpp"

namespace xreval {

const char* to_string(OperatorCategory category) {
    switch (category) {
        case OperatorCategory::perceptual: return "perceptual";
        case OperatorCategory::cognitive: return "cognitive";
        case OperatorCategory::motor: return "motor";
        case OperatorCategory::general: return "general";
    }
    return "?";
}

std::optional<OperatorCategory> category_from_string(std::string_view text) {
    if (text == "perceptual") return OperatorCategory::perceptual;
    if (text == "cognitive") return OperatorCategory::cognitive;
    if (text == "motor") return OperatorCategory::motor;
    if (text == "general") return OperatorCategory::general;
    return std::nullopt;
}

namespace {
bool is_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool is_digit(char c) {
    return c >= '0' && c <= '9';
}
}  // namespace

bool is_identifier(std::string_view text) {
    if (text.empty() || !is_letter(text.front())) return false;
    for (char c : text.substr(1)) {
        if (!is_letter(c) && !is_digit(c) && c != '_') return false;
    }
    return true;
}

Duration Duration::parameter(std::string name) {
    if (!is_identifier(name)) throw InvalidIdentifierError(name);
    Duration d;
    d.param_ = std::move(name);
    return d;
}

void Catalog::add(OperatorDef def) {
    if (!is_identifier(def.symbol)) throw InvalidIdentifierError(def.symbol);
    if (contains(def.symbol)) throw DuplicateSymbolError(def.symbol);
    index_.emplace(def.symbol, ops_.size());
    ops_.push_back(std::move(def));
}

const OperatorDef* Catalog::find(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return nullptr;
    return &ops_[it->second];
}

const OperatorDef& Catalog::lookup(std::string_view symbol) const {
    const OperatorDef* def = find(symbol);
    if (!def) throw UnknownOperatorError(std::string(symbol));
    return *def;
}

Catalog Catalog::with_override(std::string_view symbol, const Duration& duration) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) throw UnknownOperatorError(std::string(symbol));
    Catalog copy(*this);
    copy.ops_[it->second].duration = duration;
    return copy;
}

Catalog builtin_catalog() {
    Catalog c;
    auto ms = [](std::int64_t v) { return Duration::fixed(v); };
    c.add({"S", "Scanning", OperatorCategory::perceptual, ms(13), "Potter et al. 2014"});
    c.add({"P_e", "Pointing with Eye", OperatorCategory::perceptual, ms(230), "Sethawong & Sethawong 2019"});
    c.add({"M", "Mentally Prepare", OperatorCategory::cognitive, ms(1350), "Erazo & Pino 2015"});
    c.add({"Pa", "Pause before the Speech", OperatorCategory::cognitive, ms(700), "Jaffe et al. 1970"});
    c.add({"Pr", "Hand Preparation", OperatorCategory::motor, ms(452), "Erazo & Pino 2015"});
    c.add({"P_h", "Pointing with Hand", OperatorCategory::motor, ms(1046), "Erazo & Pino 2015"});
    c.add({"G_H", "Grab with Hand", OperatorCategory::motor, ms(586), "Erazo & Pino 2015"});
    c.add({"G_V", "Grab with Voice Command", OperatorCategory::motor, ms(130), "Jaffe et al. 1970"});
    c.add({"R_V", "Release with Voice Command", OperatorCategory::motor, ms(130), "Jaffe et al. 1970"});
    c.add({"MV", "Move with Hand", OperatorCategory::motor, ms(700), "Tonn-Eichstadt 2006"});
    c.add({"R_H", "Release with Hand", OperatorCategory::motor, ms(520), "Erazo & Pino 2015"});
    c.add({"A", "Adjusting the Accuracy", OperatorCategory::motor, Duration::parameter("A"), "task dependent"});
    c.add({"Re", "Hand Retraction", OperatorCategory::motor, ms(746), "Erazo & Pino 2015"});
    c.add({"W", "System Waiting Time", OperatorCategory::general, ms(550), "measured"});
    return c;
}

}  // namespace xreval
