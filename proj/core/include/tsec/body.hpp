#pragma once

#include "tsec/geometry.hpp"
#include "tsec/types.hpp"

#include <functional>
#include <memory>
#include <string>

namespace tsec {

/// Support value h_K(u) together with the boundary point where the
/// supporting hyperplane with outer normal u touches K.
struct SupportPoint {
    double value = 0.0;
    Vec3 contact = Vec3::Zero();
};

/// Certified properties of a body.
struct BodyTraits {
    int dim = 3;
    bool strictly_convex = false;
    bool o_symmetric = false;
};

/// Implementation hook for support-function bodies. `eval` receives a unit
/// vector (z = 0 for planar bodies) and must be thread-safe.
class BodyModel {
public:
    virtual ~BodyModel() = default;
    virtual SupportPoint eval(const Vec3& u) const = 0;
};

/// Compact convex body with nonempty interior in R^2 or R^3, represented by
/// its support function and contact map. Immutable; cheap to copy.
class ConvexBody {
public:
    ConvexBody(std::shared_ptr<const BodyModel> model, BodyTraits traits, std::string label);

    int dim() const noexcept { return traits_.dim; }
    bool strictly_convex() const noexcept { return traits_.strictly_convex; }
    bool o_symmetric() const noexcept { return traits_.o_symmetric; }
    const BodyTraits& traits() const noexcept { return traits_; }
    /// max of h over the +/- coordinate directions; all relative tolerances
    /// are taken against this length.
    double scale() const noexcept { return scale_; }
    const std::string& label() const noexcept { return label_; }

    SupportPoint eval(const Direction& u) const;
    double support(const Direction& u) const { return eval(u).value; }
    Vec3 contact(const Direction& u) const { return eval(u).contact; }

    /// Unchecked evaluation for inner loops; u must already be unit and
    /// planar for 2-D bodies.
    SupportPoint eval_unit(const Vec3& u) const { return model_->eval(u); }
    /// Positively homogeneous extension h(x) = |x| h(x / |x|).
    double support_homogeneous(const Vec3& x) const;

    const std::shared_ptr<const BodyModel>& model() const noexcept { return model_; }

private:
    std::shared_ptr<const BodyModel> model_;
    BodyTraits traits_;
    std::string label_;
    double scale_ = 1.0;
};

/// Validating support query; throws InputError("non-unit") for non-unit u
/// and InputError("bad-direction") for a non-planar u on a 2-D body.
SupportPoint support_eval(const ConvexBody& body, const Vec3& u);

// Catalog bodies. Planar bodies (dim == 2) live in the xy-plane.
ConvexBody make_ball(int dim, double radius);
/// Axis-aligned ellipsoid; two semi-axes give an ellipse, three an ellipsoid.
ConvexBody make_ellipsoid(const Vec3& semi_axes, int dim);
/// {x : |x|_p <= scale}, p >= 2; support is scale * |u|_q with 1/p + 1/q = 1.
ConvexBody make_lp_ball(int dim, double p, double scale);
/// Reuleaux triangle of the given width centred at O with a vertex on +y.
ConvexBody make_reuleaux(double width);
ConvexBody make_custom(BodyTraits traits, std::function<SupportPoint(const Vec3&)> eval,
                       std::string label = "custom");

// Operations on bodies.
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
/// Image A(K) for an invertible linear map (2x2 maps use the top-left block).
ConvexBody affine_image(const ConvexBody& body, const Mat3& map);
ConvexBody translate_body(const ConvexBody& body, const Vec3& offset);
ConvexBody dilate_body(const ConvexBody& body, double factor);
/// -K, with h_{-K}(u) = h_K(-u).
ConvexBody reflect_body(const ConvexBody& body);
/// Orthogonal projection of a 3-D body onto u^perp, expressed in the frame
/// returned by orthonormal_frame(u).
ConvexBody project_body(const ConvexBody& body, const Direction& u);

}  // namespace tsec
