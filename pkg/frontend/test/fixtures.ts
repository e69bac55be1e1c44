/** Responses recorded from the live service for the 2x5 and 4x4 golden
 * scenarios; the UI tests run against these shapes. */

export const scenarioDoc = {
  "id": "s1",
  "agents": 2,
  "tasks": [
    "t1",
    "t2",
    "t3",
    "t4",
    "t5"
  ],
  "costs": [
    [
      0.3,
      0.5,
      0.4,
      0.077,
      0.8
    ],
    [
      0.4,
      0.7,
      0.077,
      0.49,
      0.13
    ]
  ],
  "performance": {
    "model": "makespan"
  },
  "discount": 0.9
} as const;

export const fairResponse = {
  "allocation": "11101",
  "acceptStep": 4,
  "selfishnessBounds": [
    0.077,
    1.307
  ],
  "chain": {
    "provenance": "true-costs",
    "discount": 0.9,
    "order": [
      2,
      0,
      1
    ],
    "candidates": [
      "00000",
      "00001",
      "00010",
      "00011",
      "00100",
      "00101",
      "00110",
      "00111",
      "01000",
      "01001",
      "01010",
      "01011",
      "01100",
      "01101",
      "01110",
      "01111",
      "10000",
      "10001",
      "10010",
      "10011",
      "10100",
      "10101",
      "10110",
      "10111",
      "11000",
      "11001",
      "11010",
      "11011",
      "11100",
      "11101",
      "11110",
      "11111"
    ],
    "excluded": [],
    "nodes": [
      {
        "step": 0,
        "proposer": 2,
        "offer": "10101",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 0.577,
            "continuationCost": 0.11736015851242189
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 0.607,
            "continuationCost": 1.9920743789056545
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 4
        }
      },
      {
        "step": 1,
        "proposer": 0,
        "offer": "11111",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 1.9966666666666668,
            "continuationCost": 1.9920743789056545
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 1.9966666666666668,
            "continuationCost": 1.9920743789056545
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 4
        }
      },
      {
        "step": 2,
        "proposer": 1,
        "offer": "00000",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 2.564197530864197,
            "continuationCost": 1.9920743789056545
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 2.564197530864197,
            "continuationCost": 0.11736015851242189
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 4
        }
      },
      {
        "step": 3,
        "proposer": 2,
        "offer": "00111",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 1.0973936899862824,
            "continuationCost": 0.11736015851242189
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 0.9561042524005485,
            "continuationCost": 1.9920743789056545
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 4
        }
      },
      {
        "step": 4,
        "proposer": 0,
        "offer": "11101",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 1.9920743789056545,
            "continuationCost": 2.6012505956487435
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 1.9920743789056545,
            "continuationCost": 2.6012505956487435
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 4
        }
      },
      {
        "step": 5,
        "proposer": 1,
        "offer": "00100",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 2.840014225473759,
            "continuationCost": 2.6012505956487435
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 2.840014225473759,
            "continuationCost": 1.08122544052875
          }
        ],
        "speOutcome": {
          "allocation": "01101",
          "acceptStep": 10
        }
      },
      {
        "step": 6,
        "proposer": 2,
        "offer": "01001",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 1.4620625807944811,
            "continuationCost": 1.08122544052875
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 1.561791431221904,
            "continuationCost": 2.6012505956487435
          }
        ],
        "speOutcome": {
          "allocation": "01101",
          "acceptStep": 10
        }
      },
      {
        "step": 7,
        "proposer": 0,
        "offer": "01111",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 2.9207799590589016,
            "continuationCost": 2.6012505956487435
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 2.9207799590589016,
            "continuationCost": 2.6012505956487435
          }
        ],
        "speOutcome": {
          "allocation": "01101",
          "acceptStep": 10
        }
      },
      {
        "step": 8,
        "proposer": 1,
        "offer": "00001",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 2.9665441881159773,
            "continuationCost": 2.6012505956487435
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 2.9665441881159773,
            "continuationCost": 1.08122544052875
          }
        ],
        "speOutcome": {
          "allocation": "01101",
          "acceptStep": 10
        }
      },
      {
        "step": 9,
        "proposer": 2,
        "offer": "00101",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 2.2636902923324733,
            "continuationCost": 1.08122544052875
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 0.5343031818846318,
            "continuationCost": 2.6012505956487435
          }
        ],
        "speOutcome": {
          "allocation": "01101",
          "acceptStep": 10
        }
      },
      {
        "step": 10,
        "proposer": 0,
        "offer": "01101",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 2.6012505956487435,
            "continuationCost": 6.637812191145775
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 2.6012505956487435,
            "continuationCost": 6.637812191145775
          }
        ],
        "speOutcome": {
          "allocation": "01101",
          "acceptStep": 10
        }
      },
      {
        "step": 11,
        "proposer": 1,
        "offer": "10000",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 5.662651364042408,
            "continuationCost": 6.637812191145775
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 5.662651364042408,
            "continuationCost": 2.574175947297996
          }
        ],
        "speOutcome": {
          "allocation": "11001",
          "acceptStep": 16
        }
      },
      {
        "step": 12,
        "proposer": 2,
        "offer": "10001",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 3.459269919758289,
            "continuationCost": 2.574175947297996
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 1.8765742655802387,
            "continuationCost": 6.637812191145775
          }
        ],
        "speOutcome": {
          "allocation": "11001",
          "acceptStep": 16
        }
      },
      {
        "step": 13,
        "proposer": 0,
        "offer": "11011",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 6.766682886368996,
            "continuationCost": 6.637812191145775
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 6.766682886368996,
            "continuationCost": 6.637812191145775
          }
        ],
        "speOutcome": {
          "allocation": "11001",
          "acceptStep": 16
        }
      },
      {
        "step": 14,
        "proposer": 1,
        "offer": "10100",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 6.019200474502652,
            "continuationCost": 6.637812191145775
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 6.019200474502652,
            "continuationCost": 2.574175947297996
          }
        ],
        "speOutcome": {
          "allocation": "11001",
          "acceptStep": 16
        }
      },
      {
        "step": 15,
        "proposer": 2,
        "offer": "10011",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 4.371242174656974,
            "continuationCost": 2.574175947297996
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 4.954074464611237,
            "continuationCost": 6.637812191145775
          }
        ],
        "speOutcome": {
          "allocation": "11001",
          "acceptStep": 16
        }
      },
      {
        "step": 16,
        "proposer": 0,
        "offer": "11001",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 6.637812191145775,
            "continuationCost": 10.756816612382929
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 6.637812191145775,
            "continuationCost": 7.101144016840727
          }
        ],
        "speOutcome": {
          "allocation": "11001",
          "acceptStep": 16
        }
      },
      {
        "step": 17,
        "proposer": 1,
        "offer": "00010",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 11.992433949676196,
            "continuationCost": 10.756816612382929
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 11.992433949676196,
            "continuationCost": 10.756816612382929
          }
        ],
        "speOutcome": {
          "allocation": "01100",
          "acceptStep": 21
        }
      },
      {
        "step": 18,
        "proposer": 2,
        "offer": "10111",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": true,
            "offerCost": 3.331231652687832,
            "continuationCost": 10.756816612382929
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 7.308722245997104,
            "continuationCost": 7.101144016840727
          }
        ],
        "speOutcome": {
          "allocation": "01100",
          "acceptStep": 21
        }
      },
      {
        "step": 19,
        "proposer": 0,
        "offer": "01011",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 9.771612847884304,
            "continuationCost": 10.756816612382929
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 9.771612847884304,
            "continuationCost": 7.101144016840727
          }
        ],
        "speOutcome": {
          "allocation": "01100",
          "acceptStep": 21
        }
      },
      {
        "step": 20,
        "proposer": 1,
        "offer": "00110",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 13.160421343951928,
            "continuationCost": 10.756816612382929
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 13.160421343951928,
            "continuationCost": 10.756816612382929
          }
        ],
        "speOutcome": {
          "allocation": "01100",
          "acceptStep": 21
        }
      },
      {
        "step": 21,
        "proposer": 2,
        "offer": "01100",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": true,
            "offerCost": 10.756816612382929,
            "continuationCost": 10.994598306894757
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 7.101144016840727,
            "continuationCost": 14.755578343460808
          }
        ],
        "speOutcome": {
          "allocation": "01100",
          "acceptStep": 21
        }
      },
      {
        "step": 22,
        "proposer": 0,
        "offer": "11110",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 16.92779504658014,
            "continuationCost": 14.755578343460808
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 16.92779504658014,
            "continuationCost": 14.755578343460808
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 24
        }
      },
      {
        "step": 23,
        "proposer": 1,
        "offer": "00011",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 13.539528131637786,
            "continuationCost": 14.755578343460808
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 13.539528131637786,
            "continuationCost": 10.994598306894757
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 24
        }
      },
      {
        "step": 24,
        "proposer": 2,
        "offer": "11100",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": true,
            "offerCost": 10.994598306894757,
            "continuationCost": 15.322511260083914
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 14.755578343460808,
            "continuationCost": 17.64874706047847
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 24
        }
      },
      {
        "step": 25,
        "proposer": 0,
        "offer": "01110",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 17.64874706047847,
            "continuationCost": 21.960546441220156
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 17.64874706047847,
            "continuationCost": 18.916680568004832
          }
        ],
        "speOutcome": {
          "allocation": "01110",
          "acceptStep": 25
        }
      },
      {
        "step": 26,
        "proposer": 1,
        "offer": "01000",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 24.407677027426594,
            "continuationCost": 21.960546441220156
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 24.407677027426594,
            "continuationCost": 21.960546441220156
          }
        ],
        "speOutcome": {
          "allocation": "11000",
          "acceptStep": 27
        }
      },
      {
        "step": 27,
        "proposer": 2,
        "offer": "11000",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": true,
            "offerCost": 21.960546441220156,
            "continuationCost": 30.666772338703424
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 18.916680568004832,
            "continuationCost": 22.811360655020163
          }
        ],
        "speOutcome": {
          "allocation": "11000",
          "acceptStep": 27
        }
      },
      {
        "step": 28,
        "proposer": 0,
        "offer": "11010",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 30.381335457704726,
            "continuationCost": 30.666772338703424
          },
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 30.381335457704726,
            "continuationCost": 22.811360655020163
          }
        ],
        "speOutcome": {
          "allocation": "10110",
          "acceptStep": 30
        }
      },
      {
        "step": 29,
        "proposer": 1,
        "offer": "10010",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 36.09243206016634,
            "continuationCost": 30.666772338703424
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 36.09243206016634,
            "continuationCost": 30.666772338703424
          }
        ],
        "speOutcome": {
          "allocation": "10110",
          "acceptStep": 30
        }
      },
      {
        "step": 30,
        "proposer": 2,
        "offer": "10110",
        "terminal": false,
        "decisions": [
          {
            "agent": 0,
            "accepted": true,
            "offerCost": 30.666772338703424,
            "continuationCost": 39.31637479320951
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 22.811360655020163,
            "continuationCost": 31.190990669279547
          }
        ],
        "speOutcome": {
          "allocation": "10110",
          "acceptStep": 30
        }
      },
      {
        "step": 31,
        "proposer": 0,
        "offer": "01010",
        "terminal": true,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 39.31637479320951,
            "continuationCost": "inf"
          },
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 31.190990669279547,
            "continuationCost": "inf"
          }
        ],
        "speOutcome": {
          "allocation": "01010",
          "acceptStep": 31
        }
      }
    ],
    "spe": {
      "allocation": "11101",
      "acceptStep": 4
    }
  }
} as const;

export const neighborsResponse = {
  "base": "11101",
  "neighbors": [
    "01101",
    "10101",
    "11001",
    "11100",
    "11111"
  ]
} as const;

export const counterfactualRefuted = {
  "verdict": {
    "ok": true,
    "violatedProperty": null,
    "reason": "valid counterfactual",
    "hammingDistance": 1,
    "proposalCost": 0.077,
    "foilCost": 0
  },
  "outcome": "refuted",
  "explanation": {
    "style": "negotiationTree",
    "questioner": 0,
    "proposal": "11101",
    "counterfactual": "11111",
    "finalAllocation": "01101",
    "finalCostToQuestioner": 0.377,
    "proposalCostToQuestioner": 0.077,
    "length": 7,
    "guaranteeHolds": true,
    "steps": [
      {
        "step": 0,
        "proposer": 0,
        "offer": "11111",
        "accepted": false,
        "rejectedBy": 1,
        "rejectorOfferCost": 1.7970000000000002,
        "rejectorContinuationCost": 1.7066805158051408
      },
      {
        "step": 1,
        "proposer": 1,
        "offer": "00000",
        "accepted": false,
        "rejectedBy": 0,
        "rejectorOfferCost": 2.3077777777777775,
        "rejectorContinuationCost": 0.709392011530913
      },
      {
        "step": 2,
        "proposer": 2,
        "offer": "10101",
        "accepted": false,
        "rejectedBy": 0,
        "rejectorOfferCost": 0.7123456790123456,
        "rejectorContinuationCost": 0.709392011530913
      },
      {
        "step": 3,
        "proposer": 0,
        "offer": "01111",
        "accepted": false,
        "rejectedBy": 1,
        "rejectorOfferCost": 1.9163237311385455,
        "rejectorContinuationCost": 1.7066805158051408
      },
      {
        "step": 4,
        "proposer": 1,
        "offer": "00100",
        "accepted": false,
        "rejectedBy": 0,
        "rejectorOfferCost": 2.556012802926383,
        "rejectorContinuationCost": 0.709392011530913
      },
      {
        "step": 5,
        "proposer": 2,
        "offer": "00111",
        "accepted": false,
        "rejectedBy": 0,
        "rejectorOfferCost": 1.3548070246744228,
        "rejectorContinuationCost": 0.709392011530913
      },
      {
        "step": 6,
        "proposer": 0,
        "offer": "01101",
        "accepted": true,
        "rejectedBy": null,
        "rejectorOfferCost": null,
        "rejectorContinuationCost": null
      }
    ]
  }
} as const;

export const counterfactualStands = {
  "verdict": {
    "ok": true,
    "violatedProperty": null,
    "reason": "valid counterfactual",
    "hammingDistance": 1,
    "proposalCost": 1.307,
    "foilCost": 0.9069999999999999
  },
  "outcome": "foil-stands",
  "explanation": {
    "style": "negotiationTree",
    "questioner": 1,
    "proposal": "11101",
    "counterfactual": "01101",
    "finalAllocation": "01101",
    "finalCostToQuestioner": 0.9069999999999999,
    "proposalCostToQuestioner": 1.307,
    "length": 1,
    "guaranteeHolds": false,
    "steps": [
      {
        "step": 0,
        "proposer": 1,
        "offer": "01101",
        "accepted": true,
        "rejectedBy": null,
        "rejectorOfferCost": null,
        "rejectorContinuationCost": null
      }
    ]
  }
} as const;

export const counterfactualAcceptance = {
  "verdict": {
    "ok": false,
    "violatedProperty": 2,
    "reason": "counterfactual does not lower your cost (1.797 vs 1.307)",
    "hammingDistance": 1,
    "proposalCost": 1.307,
    "foilCost": 1.7970000000000002
  },
  "outcome": "acceptance",
  "explanation": null
} as const;

export const invalidFoilResponse = {
  "verdict": {
    "ok": false,
    "violatedProperty": 1,
    "reason": "counterfactual equals the proposed allocation",
    "hammingDistance": 0,
    "proposalCost": 1.307,
    "foilCost": 1.307
  },
  "violatedProperty": 1
} as const;

export const noiseSweep = {
  "kind": "noise",
  "normalizer": null,
  "rows": [
    {
      "epsilon": 0,
      "mode": "PN",
      "trial": 0,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 0,
      "mode": "PN",
      "trial": 0,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 0,
      "mode": "PN",
      "trial": 1,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 0,
      "mode": "PN",
      "trial": 1,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 0,
      "mode": "PN",
      "trial": 2,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 0,
      "mode": "PN",
      "trial": 2,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 1,
      "mode": "PN",
      "trial": 0,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 1,
      "mode": "PN",
      "trial": 0,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 1,
      "mode": "PN",
      "trial": 1,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 1,
      "mode": "PN",
      "trial": 1,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 1,
      "mode": "PN",
      "trial": 2,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 1,
      "mode": "PN",
      "trial": 2,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 2,
      "mode": "PN",
      "trial": 0,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 2,
      "mode": "PN",
      "trial": 0,
      "agent": 1,
      "expl_length": 1
    },
    {
      "epsilon": 2,
      "mode": "PN",
      "trial": 1,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 2,
      "mode": "PN",
      "trial": 1,
      "agent": 1,
      "expl_length": 0
    },
    {
      "epsilon": 2,
      "mode": "PN",
      "trial": 2,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 2,
      "mode": "PN",
      "trial": 2,
      "agent": 1,
      "expl_length": 1
    },
    {
      "epsilon": 3,
      "mode": "PN",
      "trial": 0,
      "agent": 0,
      "expl_length": 7
    },
    {
      "epsilon": 3,
      "mode": "PN",
      "trial": 0,
      "agent": 1,
      "expl_length": 1
    },
    {
      "epsilon": 3,
      "mode": "PN",
      "trial": 1,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 3,
      "mode": "PN",
      "trial": 1,
      "agent": 1,
      "expl_length": 1
    },
    {
      "epsilon": 3,
      "mode": "PN",
      "trial": 2,
      "agent": 0,
      "expl_length": 0
    },
    {
      "epsilon": 3,
      "mode": "PN",
      "trial": 2,
      "agent": 1,
      "expl_length": 1
    }
  ],
  "aggregates": [
    {
      "epsilon": 0,
      "mean": 0.0,
      "stddev": 0.0
    },
    {
      "epsilon": 1,
      "mean": 0.0,
      "stddev": 0.0
    },
    {
      "epsilon": 2,
      "mean": 0.3333333333333333,
      "stddev": 0.4714045207910317
    },
    {
      "epsilon": 3,
      "mean": 1.6666666666666667,
      "stddev": 2.4267032964268394
    }
  ]
} as const;

export const subsetSweep = {
  "kind": "subset",
  "normalizer": 256,
  "rows": [
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 0,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 1,
      "trial": 1,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 0,
      "agent": 3,
      "expl_length": 154,
      "rel_length": 0.6015625
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "trial": 1,
      "agent": 3,
      "expl_length": 154,
      "rel_length": 0.6015625
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 0,
      "agent": 3,
      "expl_length": 154,
      "rel_length": 0.6015625
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 1,
      "mu": 5,
      "trial": 1,
      "agent": 3,
      "expl_length": 154,
      "rel_length": 0.6015625
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 0,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 1,
      "trial": 1,
      "agent": 3,
      "expl_length": 154,
      "rel_length": 0.6015625
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 0,
      "agent": 3,
      "expl_length": 154,
      "rel_length": 0.6015625
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 3,
      "trial": 1,
      "agent": 3,
      "expl_length": 1,
      "rel_length": 0.00390625
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 0,
      "agent": 3,
      "expl_length": 4,
      "rel_length": 0.015625
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 2,
      "mu": 5,
      "trial": 1,
      "agent": 3,
      "expl_length": 149,
      "rel_length": 0.58203125
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 0,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 1,
      "trial": 1,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 0,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "trial": 1,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 0,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 0,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 0,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 0,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 1,
      "agent": 0,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 1,
      "agent": 1,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 1,
      "agent": 2,
      "expl_length": 0,
      "rel_length": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "trial": 1,
      "agent": 3,
      "expl_length": 0,
      "rel_length": 0.0
    }
  ],
  "aggregates": [
    {
      "subset_k": 1,
      "mu": 1,
      "mean": 0.0,
      "stddev": 0.0
    },
    {
      "subset_k": 1,
      "mu": 3,
      "mean": 0.150390625,
      "stddev": 0.2604842034820382
    },
    {
      "subset_k": 1,
      "mu": 5,
      "mean": 0.150390625,
      "stddev": 0.2604842034820382
    },
    {
      "subset_k": 2,
      "mu": 1,
      "mean": 0.0751953125,
      "stddev": 0.1989480966327866
    },
    {
      "subset_k": 2,
      "mu": 3,
      "mean": 0.07568359375,
      "stddev": 0.19876765622580306
    },
    {
      "subset_k": 2,
      "mu": 5,
      "mean": 0.07470703125,
      "stddev": 0.1918187270758693
    },
    {
      "subset_k": 3,
      "mu": 1,
      "mean": 0.0,
      "stddev": 0.0
    },
    {
      "subset_k": 3,
      "mu": 3,
      "mean": 0.0,
      "stddev": 0.0
    },
    {
      "subset_k": 3,
      "mu": 5,
      "mean": 0.0,
      "stddev": 0.0
    }
  ]
} as const;

export const beliefDoc = {
  "owner": 1,
  "believedCosts": [
    [
      0.10502158052834637,
      0.5,
      0.4,
      0.077,
      0.0
    ],
    [
      0.4,
      0.7,
      0.077,
      0.49,
      0.13
    ]
  ],
  "believedPerformance": {
    "model": "makespan"
  },
  "exact": [
    1
  ]
} as const;

export const optimalCounterfactualResponse = {
  "agent": 1,
  "proposal": "11101",
  "beliefProvenance": "stored",
  "counterfactual": "11100",
  "chain": {
    "provenance": "beliefs-of(1)",
    "discount": 0.9,
    "order": [
      1,
      2,
      0
    ],
    "candidates": [
      "01101",
      "10101",
      "11001",
      "11100",
      "11101",
      "11111"
    ],
    "excluded": [],
    "nodes": [
      {
        "step": 0,
        "proposer": 1,
        "offer": "10101",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 0.607,
            "continuationCost": 1.6145404663923182
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 0.577,
            "continuationCost": 0.10562414266117968
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 3
        }
      },
      {
        "step": 1,
        "proposer": 2,
        "offer": "01101",
        "terminal": false,
        "decisions": [
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 1.0077777777777777,
            "continuationCost": 1.6145404663923182
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 0.20224620058705153,
            "continuationCost": 0.10562414266117968
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 3
        }
      },
      {
        "step": 2,
        "proposer": 0,
        "offer": "11111",
        "terminal": false,
        "decisions": [
          {
            "agent": 1,
            "accepted": false,
            "offerCost": 2.218518518518519,
            "continuationCost": 1.6145404663923182
          },
          {
            "agent": 2,
            "accepted": false,
            "offerCost": 2.218518518518519,
            "continuationCost": 1.6145404663923182
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 3
        }
      },
      {
        "step": 3,
        "proposer": 1,
        "offer": "11100",
        "terminal": false,
        "decisions": [
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 1.6145404663923182,
            "continuationCost": 2.213415976561838
          },
          {
            "agent": 0,
            "accepted": true,
            "offerCost": 0.10562414266117968,
            "continuationCost": 0.1304001761249132
          }
        ],
        "speOutcome": {
          "allocation": "11100",
          "acceptStep": 3
        }
      },
      {
        "step": 4,
        "proposer": 2,
        "offer": "11001",
        "terminal": false,
        "decisions": [
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 1.8747142203932328,
            "continuationCost": 2.213415976561838
          },
          {
            "agent": 0,
            "accepted": false,
            "offerCost": 0.7270233196159123,
            "continuationCost": 0.1304001761249132
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 5
        }
      },
      {
        "step": 5,
        "proposer": 0,
        "offer": "11101",
        "terminal": true,
        "decisions": [
          {
            "agent": 1,
            "accepted": true,
            "offerCost": 2.213415976561838,
            "continuationCost": "inf"
          },
          {
            "agent": 2,
            "accepted": true,
            "offerCost": 2.213415976561838,
            "continuationCost": "inf"
          }
        ],
        "speOutcome": {
          "allocation": "11101",
          "acceptStep": 5
        }
      }
    ],
    "spe": {
      "allocation": "11100",
      "acceptStep": 3
    }
  }
} as const;
