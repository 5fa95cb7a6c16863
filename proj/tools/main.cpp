#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dyckset/oracle.hpp"
#include "dyckset/serialize.hpp"
#include "dyckset/synthesize.hpp"

namespace {

using dyckset::Alphabet;
using dyckset::DyckWord;
using dyckset::LambdaParam;
using dyckset::Profile;
using dyckset::Rational;
using dyckset::ScaledSet;
using dyckset::SetMode;
using dyckset::Word;

Alphabet alphabet_for(bool parens) { return parens ? Alphabet::Parens : Alphabet::Letters; }

// Word arguments accept "-" to read from stdin (surrounding whitespace
// stripped).
std::string resolve_word_text(const std::string& argument) {
    if (argument != "-") return argument;
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* field) {
    std::vector<Rational> values;
    if (text.empty()) return values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw dyckset::ParseError(std::string("field \"") + field + "\": empty entry");
        const auto last = item.find_last_not_of(" \t");
        try {
            values.push_back(dyckset::parse_rational(item.substr(first, last - first + 1)));
        } catch (const dyckset::ParseError& e) {
            throw dyckset::ParseError(std::string("field \"") + field + "\": " + e.what());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

// Accepts "symbolic" or a rational > 1.
LambdaParam parse_lambda(const std::string& text) {
    if (text == "symbolic") return LambdaParam::symbolic();
    try {
        return LambdaParam::rational(dyckset::parse_rational(text));
    } catch (const dyckset::ParseError& e) {
        throw dyckset::ParseError(std::string("field \"lambda\": ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw dyckset::ParseError(std::string("field \"lambda\": ") + e.what());
    }
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += dyckset::rational_to_string(values[i]);
    }
    return out;
}

struct EncodeOptions {
    bool power = false;
    bool plain = false;
    std::string exponents;
    bool exponents_given = false;
    std::string elements;
    bool elements_given = false;
    std::string lambda = "symbolic";
    bool json = false;
    bool parens = false;
};

int run_encode(const EncodeOptions& options) {
    if (options.power == options.plain)
        throw dyckset::ParseError("exactly one of --power / --plain is required");
    const LambdaParam lambda = parse_lambda(options.lambda);

    ScaledSet set = ScaledSet::power({});
    if (options.power) {
        if (!options.exponents_given)
            throw dyckset::ParseError("field \"exponents\": --power requires --exponents");
        if (options.elements_given)
            throw dyckset::ParseError("field \"elements\": not valid with --power");
        set = ScaledSet::power(parse_rational_list(options.exponents, "exponents"));
    } else {
        if (!options.elements_given)
            throw dyckset::ParseError("field \"elements\": --plain requires --elements");
        if (options.exponents_given)
            throw dyckset::ParseError("field \"exponents\": not valid with --plain");
        try {
            set = ScaledSet::plain(parse_rational_list(options.elements, "elements"));
        } catch (const std::invalid_argument& e) {
            throw dyckset::ParseError(std::string("field \"elements\": ") + e.what());
        }
        if (lambda.is_symbolic())
            throw dyckset::ModeMismatchError(
                "field \"lambda\": plain-mode set requires a rational lambda");
    }

    if (options.json) {
        const Profile profile = dyckset::symmetric_difference_profile(set, lambda);
        nlohmann::ordered_json doc;
        doc["word"] = dyckset::encode(set, lambda).str();
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const dyckset::ProfileEntry& entry : profile) {
            nlohmann::ordered_json item;
            item["magnitude"] = dyckset::rational_to_string(entry.magnitude);
            item["origin"] = entry.origin == dyckset::Origin::FromS ? "S" : "lambdaS";
            entries.push_back(std::move(item));
        }
        doc["profile"] = std::move(entries);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << dyckset::encode(set, lambda).str(alphabet_for(options.parens)) << "\n";
    }
    return 0;
}

struct SynthesizeOptions {
    std::string word;
    bool check = false;
    bool json = false;
    bool parens = false;
};

int run_synthesize(const SynthesizeOptions& options) {
    const Alphabet alphabet = alphabet_for(options.parens);
    const DyckWord word = DyckWord::parse(resolve_word_text(options.word), alphabet);
    const ScaledSet witness = dyckset::synthesize(word);
    if (options.check &&
        dyckset::encode(witness, LambdaParam::symbolic()) != word.word()) {
        std::cerr << "internal error: witness for \"" << word.str()
                  << "\" failed the re-encoding check\n";
        return 1;
    }
    if (options.json) {
        std::cout << dyckset::set_to_json(witness, LambdaParam::symbolic()) << "\n";
    } else {
        std::cout << join_rationals(witness.elements()) << "\n";
    }
    return 0;
}

int run_factor(const std::string& argument, bool parens) {
    const Alphabet alphabet = alphabet_for(parens);
    const DyckWord word = DyckWord::parse(resolve_word_text(argument), alphabet);
    for (const DyckWord& factor : dyckset::factor_irreducible(word))
        std::cout << factor.str(alphabet) << "\n";
    return 0;
}

int run_validate(const std::string& argument, bool parens) {
    const Word word = Word::parse(resolve_word_text(argument), alphabet_for(parens));
    if (const auto position = dyckset::first_dyck_violation(word)) {
        const char unmatched =
            dyckset::letter_to_char(*position < word.size() ? dyckset::Letter::B
                                                            : dyckset::Letter::A,
                                    alphabet_for(parens));
        std::cout << "not a Dyck word: unmatched '" << unmatched << "' at position " << *position
                  << "\n";
        return 4;
    }
    std::cout << "dyck\n";
    return 0;
}

// "1" for exponent 0, "e" for 1, "e^k" for integers, "e^{p/q}" otherwise.
std::string power_of_e(const Rational& exponent) {
    if (exponent == 0) return "1";
    if (exponent == 1) return "e";
    if (denominator(exponent) == 1) return "e^" + numerator(exponent).str();
    return "e^{" + dyckset::rational_to_string(exponent) + "}";
}

std::string display_set(const ScaledSet& set) {
    std::string out;
    for (std::size_t i = 0; i < set.elements().size(); ++i) {
        if (i > 0) out += ", ";
        out += power_of_e(set.elements()[i]);
    }
    return out;
}

std::string join_exponents_spaced(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += dyckset::rational_to_string(values[i]);
    }
    return out;
}

// The five rows are the strip chain of "aaababbabb" replayed upward; the
// footer concatenates rows four and five.
int run_table() {
    std::vector<DyckWord> chain = {DyckWord::parse("aaababbabb")};
    while (chain.back().size() > 2) chain.push_back(dyckset::strip_last_peak(chain.back()).word);
    std::ostringstream out;
    out << "S (exponents) | S (lambda = e) | word\n";
    for (auto row = chain.rbegin(); row != chain.rend(); ++row) {
        const ScaledSet set = dyckset::synthesize_irreducible(*row);
        out << join_exponents_spaced(set.elements()) << " | " << display_set(set) << " | "
            << row->str() << "\n";
    }
    const DyckWord u = chain[1];
    const DyckWord v = chain[0];
    const DyckWord uv(u.word() + v.word());
    const ScaledSet combined = dyckset::synthesize(uv);
    out << "concat: " << u.str() << " " << v.str() << " -> " << uv.str() << " = "
        << display_set(combined) << "\n";
    std::cout << out.str();
    return 0;
}

struct EnumerateOptions {
    std::size_t n = 0;
    bool irreducible = false;
    bool parens = false;
};

int run_enumerate(const EnumerateOptions& options) {
    const std::vector<DyckWord> words = options.irreducible
                                            ? dyckset::enumerate_irreducible(options.n)
                                            : dyckset::enumerate_dyck(options.n);
    for (const DyckWord& word : words)
        std::cout << word.str(alphabet_for(options.parens)) << "\n";
    return 0;
}

struct SelfcheckOptions {
    std::size_t n_max = 7;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_selfcheck(const SelfcheckOptions& options) {
    dyckset::PropertySuiteConfig config;
    config.n_max = options.n_max;
    config.seed = options.seed;
    const dyckset::PropertyReport report = dyckset::run_property_suite(config);
    std::cout << (options.json ? dyckset::report_to_json(report) + "\n"
                               : dyckset::report_to_text(report));
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite sets of positive reals <-> Dyck words"};
    app.require_subcommand(1);

    EncodeOptions encode_options;
    CLI::App* encode_cmd =
        app.add_subcommand("encode", "encode a set as the word of its symmetric-difference profile");
    encode_cmd->add_flag("--power", encode_options.power,
                         "elements are exponents q denoting lambda^q");
    encode_cmd->add_flag("--plain", encode_options.plain, "elements are positive rationals");
    encode_cmd->add_option("--exponents", encode_options.exponents,
                           "comma-separated exponents (power mode)");
    encode_cmd->add_option("--elements", encode_options.elements,
                           "comma-separated positive rationals (plain mode)");
    encode_cmd->add_option("--lambda", encode_options.lambda,
                           "\"symbolic\" or a rational > 1 (default: symbolic)");
    encode_cmd->add_flag("--json", encode_options.json, "emit {word, profile} as JSON");
    encode_cmd->add_flag("--parens", encode_options.parens, "render the word as parentheses");

    SynthesizeOptions synthesize_options;
    CLI::App* synthesize_cmd =
        app.add_subcommand("synthesize", "construct a witness set encoding to the given Dyck word");
    synthesize_cmd->add_option("word", synthesize_options.word, "word over {a,b}; \"-\" for stdin")
        ->required();
    synthesize_cmd->add_flag("--check", synthesize_options.check,
                             "re-encode the witness and verify the round trip");
    synthesize_cmd->add_flag("--json", synthesize_options.json, "emit the set serialization");
    synthesize_cmd->add_flag("--parens", synthesize_options.parens, "input uses ( and )");

    std::string factor_word;
    bool factor_parens = false;
    CLI::App* factor_cmd =
        app.add_subcommand("factor", "split a Dyck word into its irreducible factors");
    factor_cmd->add_option("word", factor_word, "word over {a,b}; \"-\" for stdin")->required();
    factor_cmd->add_flag("--parens", factor_parens, "input and output use ( and )");

    std::string validate_word;
    bool validate_parens = false;
    CLI::App* validate_cmd = app.add_subcommand("validate", "check membership in the Dyck language");
    validate_cmd->add_option("word", validate_word, "word over {a,b}; \"-\" for stdin")->required();
    validate_cmd->add_flag("--parens", validate_parens, "input uses ( and )");

    EnumerateOptions enumerate_options;
    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "list all Dyck words of length 2n, one per line");
    enumerate_cmd->add_option("n", enumerate_options.n, "half-length of the words")->required();
    enumerate_cmd->add_flag("--irreducible", enumerate_options.irreducible,
                            "only irreducible words");
    enumerate_cmd->add_flag("--parens", enumerate_options.parens, "render words as parentheses");

    CLI::App* table_cmd =
        app.add_subcommand("table", "print the worked irreducible-chain table for lambda = e");

    SelfcheckOptions selfcheck_options;
    CLI::App* selfcheck_cmd =
        app.add_subcommand("selfcheck", "run the property suite and report per-property results");
    selfcheck_cmd->add_option("--n-max", selfcheck_options.n_max,
                              "exhaustive checks cover Dyck words of length <= 2*n-max");
    selfcheck_cmd->add_option("--seed", selfcheck_options.seed, "seed for randomized properties");
    selfcheck_cmd->add_flag("--json", selfcheck_options.json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (encode_cmd->parsed()) {
            encode_options.exponents_given = encode_cmd->count("--exponents") > 0;
            encode_options.elements_given = encode_cmd->count("--elements") > 0;
            return run_encode(encode_options);
        }
        if (synthesize_cmd->parsed()) return run_synthesize(synthesize_options);
        if (factor_cmd->parsed()) return run_factor(factor_word, factor_parens);
        if (validate_cmd->parsed()) return run_validate(validate_word, validate_parens);
        if (enumerate_cmd->parsed()) return run_enumerate(enumerate_options);
        if (table_cmd->parsed()) return run_table();
        if (selfcheck_cmd->parsed()) return run_selfcheck(selfcheck_options);
    } catch (const dyckset::NotDyckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const dyckset::ModeMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dyckset::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dyckset::BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
