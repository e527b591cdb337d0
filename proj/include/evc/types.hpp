#ifndef EVC_TYPES_HPP
#define EVC_TYPES_HPP

namespace evc {

// Type of a graph G with respect to a vertex x, comparing evc(G_x^+)
// against evc_x(G): Type1 means the two are equal, Type2 means the
// extension is strictly more expensive.
enum class VertexType { Type1, Type2 };

inline const char* to_string(VertexType t) {
    return t == VertexType::Type1 ? "Type1" : "Type2";
}

} // namespace evc

#endif // EVC_TYPES_HPP
