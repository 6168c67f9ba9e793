#pragma once

#include <cstddef>
#include <memory>
#include <type_traits>
#include <utility>
#include <variant>

namespace tt {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

template <class T, class Variant>
struct is_alternative : std::false_type {};
template <class T, class... Ts>
struct is_alternative<T, std::variant<Ts...>> : std::bool_constant<(std::is_same_v<T, Ts> || ...)> {};

/// Immutable, shared, tagged tree node. `Node` must expose a member
/// `std::variant<...> v`. Copying a handle shares the node.
template <class Node>
class Handle {
public:
    template <class Alt>
        requires is_alternative<std::remove_cvref_t<Alt>, decltype(Node::v)>::value
    Handle(Alt&& alt) // NOLINT(google-explicit-constructor)
        : node_(std::make_shared<const Node>(Node{std::forward<Alt>(alt)})) {}

    const Node& node() const { return *node_; }
    const auto& view() const { return node_->v; }

    template <class Alt>
    bool is() const {
        return std::holds_alternative<Alt>(node_->v);
    }
    template <class Alt>
    const Alt* as() const {
        return std::get_if<Alt>(&node_->v);
    }
    std::size_t tag() const { return node_->v.index(); }

    bool same_node(const Handle& other) const { return node_ == other.node_; }

    friend bool operator==(const Handle& a, const Handle& b) {
        return a.node_ == b.node_ || a.node_->v == b.node_->v;
    }

private:
    std::shared_ptr<const Node> node_;
};

template <class Node, class F>
decltype(auto) visit(const Handle<Node>& h, F&& f) {
    return std::visit(std::forward<F>(f), h.view());
}

} // namespace tt
