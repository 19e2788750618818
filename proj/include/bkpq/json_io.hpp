// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the bkpq authors
//
// Minimal ordered JSON builder.  Object keys keep insertion order and doubles
// are printed with "%.17g" so repeated runs of the same configuration produce
// byte-identical reports.  Only the subset needed for bkpq reports is covered.

#ifndef BKPQ_JSON_IO_HPP
#define BKPQ_JSON_IO_HPP

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bkpq {

/// @brief Ordered JSON value (null, bool, integer, double, string, array, object).
class Json {
public:
    enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };

    Json() : kind_(Kind::Null) {}
    Json(bool b) : kind_(Kind::Bool), bool_(b) {}
    Json(int v) : kind_(Kind::Int), int_(v) {}
    Json(long long v) : kind_(Kind::Int), int_(v) {}
    Json(unsigned long long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
    Json(double v) : kind_(Kind::Real), real_(v) {}
    Json(const char* s) : kind_(Kind::Str), str_(s) {}
    Json(std::string s) : kind_(Kind::Str), str_(std::move(s)) {}

    static Json array() {
        Json j;
        j.kind_ = Kind::Arr;
        return j;
    }
    static Json object() {
        Json j;
        j.kind_ = Kind::Obj;
        return j;
    }

    Json& push_back(Json v) {
        arr_.push_back(std::move(v));
        return *this;
    }
    Json& set(const std::string& key, Json v) {
        obj_.emplace_back(key, std::move(v));
        return *this;
    }

    Kind kind() const { return kind_; }

    /// @brief Serialize without insignificant whitespace (keys in insertion order).
    std::string dump() const {
        std::string out;
        write(out);
        return out;
    }

private:
    static void write_escaped(std::string& out, const std::string& s) {
        out += '"';
        for (const char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += '"';
    }

    void write(std::string& out) const {
        switch (kind_) {
            case Kind::Null: out += "null"; break;
            case Kind::Bool: out += bool_ ? "true" : "false"; break;
            case Kind::Int: out += std::to_string(int_); break;
            case Kind::Real: {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", real_);
                out += buf;
                break;
            }
            case Kind::Str: write_escaped(out, str_); break;
            case Kind::Arr: {
                out += '[';
                for (size_t i = 0; i < arr_.size(); ++i) {
                    if (i) out += ',';
                    arr_[i].write(out);
                }
                out += ']';
                break;
            }
            case Kind::Obj: {
                out += '{';
                for (size_t i = 0; i < obj_.size(); ++i) {
                    if (i) out += ',';
                    write_escaped(out, obj_[i].first);
                    out += ':';
                    obj_[i].second.write(out);
                }
                out += '}';
                break;
            }
        }
    }

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double real_ = 0.0;
    std::string str_;
    std::vector<Json> arr_;
    std::vector<std::pair<std::string, Json>> obj_;
};

} // namespace bkpq

#endif // BKPQ_JSON_IO_HPP
