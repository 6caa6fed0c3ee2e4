"""satsem: adaptive multimodal semantic transmission over a satellite relay.

Desk-scale, fully deterministic simulator covering link budgets, tapped
delay line fading with OFDM pilot-aided reception, an analytic semantic
codec for audiovisual feature streams, a thresholded shared knowledge
base, and pluggable transmission-planning agents.
"""

__version__ = "0.1.0"
