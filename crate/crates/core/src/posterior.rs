//! Bernstein likelihood densities and the Complete Automation Probability.
