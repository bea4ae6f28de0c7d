#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slcgan/core/rng.hpp"
#include "slcgan/core/tensor.hpp"

namespace slcgan {

enum class InitScheme { dcgan, he };

// A named view of one flat parameter (or buffer) vector. `grad` is null for
// buffers such as batch-norm running statistics.
template <typename T>
struct ParamBlock {
    std::string name;
    std::vector<T>* value = nullptr;
    std::vector<T>* grad = nullptr;
};

template <typename T>
class Layer {
public:
    virtual ~Layer() = default;
    virtual std::string kind() const = 0;

    // backward() consumes the caches left by the latest forward() and
    // accumulates into parameter grads; it returns dLoss/dInput.
    virtual Tensor<T> forward(const Tensor<T>& x, bool training) = 0;
    virtual Tensor<T> backward(const Tensor<T>& dy) = 0;

    virtual void params(std::vector<ParamBlock<T>>&) {}
    virtual void buffers(std::vector<ParamBlock<T>>&) {}
    virtual void init(Rng&, InitScheme) {}

    virtual nlohmann::json arch() const { return nlohmann::json{{"kind", kind()}}; }

    // True for the layers that end one configuration-table row (activation /
    // head outputs); shape traces sample the output after these layers.
    virtual bool ends_block() const { return false; }
};

}  // namespace slcgan
