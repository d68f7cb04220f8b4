#pragma once

// Reference values published alongside the game's analysis, used by the
// verify command and the acceptance suite.

#include <array>
#include <string_view>
#include <vector>

namespace coingame::reference {

inline constexpr std::array<std::string_view, 5> kTableProbs{"0.49", "0.45", "0.42", "0.35", "0.25"};

// w_{n,p} at 8 decimals, rows n = 1..20, columns in kTableProbs order.
inline constexpr std::array<std::array<std::string_view, 5>, 20> kValueTable{{
        {{"0.49000000", "0.45000000", "0.42000000", "0.35000000", "0.25000000"}},
        {{"0.48500200", "0.42525000", "0.38102400", "0.28175000", "0.15625000"}},
        {{"0.48309103", "0.41514272", "0.36450348", "0.25147259", "0.11669922"}},
        {{"0.48258194", "0.41184019", "0.35845021", "0.23820137", "0.09781647"}},
        {{"0.48254059", "0.41107840", "0.35657129", "0.23236999", "0.08782906"}},
        {{"0.48259223", "0.41104082", "0.35610901", "0.22977285", "0.08215652"}},
        {{"0.48264193", "0.41111568", "0.35603793", "0.22859504", "0.07878468"}},
        {{"0.48268806", "0.41117954", "0.35604004", "0.22805232", "0.07672145"}},
        {{"0.48272442", "0.41122762", "0.35604176", "0.22779987", "0.07543431"}},
        {{"0.48275111", "0.41125863", "0.35603705", "0.22768230", "0.07462024"}},
        {{"0.48276987", "0.41127677", "0.35603062", "0.22762785", "0.07410012"}},
        {{"0.48278262", "0.41128638", "0.35602626", "0.22760288", "0.07376520"}},
        {{"0.48279104", "0.41129079", "0.35602460", "0.22759155", "0.07354821"}},
        {{"0.48279647", "0.41129231", "0.35602484", "0.22758643", "0.07340694"}},
        {{"0.48279990", "0.41129237", "0.35602596", "0.22758409", "0.07331459"}},
        {{"0.48280201", "0.41129184", "0.35602720", "0.22758299", "0.07325404"}},
        {{"0.48280329", "0.41129168", "0.35602833", "0.22758245", "0.07321422"}},
        {{"0.48280406", "0.41129173", "0.35602926", "0.22758218", "0.07318798"}},
        {{"0.48280451", "0.41129185", "0.35602997", "0.22758204", "0.07317065"}},
        {{"0.48280478", "0.41129198", "0.35603049", "0.22758197", "0.07315919"}},
}};

struct ExtremaRow {
        std::string_view p;
        std::vector<std::size_t> minima;
        std::vector<std::size_t> maxima;
};

// Strict local extrema of n -> w_{n,p} over n in [2, 19].
inline const std::array<ExtremaRow, 5> kExtremaTable{{
        {"0.49", {5}, {}},
        {"0.45", {6, 17}, {15}},
        {"0.42", {7, 13}, {9}},
        {"0.35", {}, {}},
        {"0.25", {}, {}},
}};

// c_1 .. c_6
inline constexpr std::array<std::string_view, 6> kFirstCoefficients{"1", "3/2", "27/16", "111/64", "3555/2048",
                                                                    "113337/65536"};

inline constexpr std::string_view kLimitL20 = "1.70347176087173673645";

struct LimitWRow {
        std::string_view p;
        std::string_view rendered;
        unsigned digits;
};

inline constexpr std::array<LimitWRow, 4> kLimitW{{
        {"0.55", "0.6288", 4},
        {"0.6", "0.7482", 4},
        {"0.7", "0.9255", 4},
        {"0.9", "0.99998", 5},
}};

} // namespace coingame::reference
