#pragma once

#include "cmetas/params.hpp"

namespace cmetas::laws {

// Gutenberg-Richter magnitude law on [m0, inf).
double gr_pdf(double mag, const ModelParams& p);
double gr_cdf(double mag, const ModelParams& p);
// Inverse-CDF sampler; u in (0,1).
double gr_sample(const ModelParams& p, double u);

// Omori-Utsu offspring delay law on [0, inf).
double omori_pdf(double t, const ModelParams& p);
double omori_sample(const ModelParams& p, double u);

// Mean first-generation offspring count of a magnitude-mag parent.
double productivity(double mag, const ModelParams& p);

// Omori survival a(t), CDF b(t) = 1 - a(t), and integrated survival
// A(tau) = int_0^tau a. theta = 1 uses the logarithmic limit of A.
double kernel_a(double t, const ModelParams& p);
double kernel_b(double t, const ModelParams& p);
double kernel_A(double tau, const ModelParams& p);

// Parent-side correlation factor q and the bilinear coupling f of the
// conditional magnitude law; |q| <= c1 and |f| <= c1.
double q_fun(double mag, const ModelParams& p);
double f_fun(double mag_parent, double mag_child, const ModelParams& p);

// Conditional magnitude density of a triggered event, its exact CDF,
// and the branch-free quadratic-inversion sampler.
double cond_pdf(double mag_child, double mag_parent, const ModelParams& p);
double cond_cdf(double M, double mag_parent, const ModelParams& p);
double cond_sample(double mag_parent, const ModelParams& p, double u);

}  // namespace cmetas::laws
