# Fixed CSV / table column order per subcommand

COURNOT_COLUMNS = ['cap', 'method', 'q_a', 'q_b', 'price', 'profit_a', 'profit_b']

PRICES_COLUMNS = ['length', 'disutility', 'loc_a', 'loc_b', 'method', 'p_a', 'p_b', 'foc_a', 'foc_b']

OUTCOME_COLUMNS = ['length', 'disutility', 'loc_a', 'loc_b', 'p_a', 'p_b', 'x', 'y', 'demand_a', 'demand_b',
                   'profit_a', 'profit_b', 'e_share']

SWEEP_COLUMNS = ['loc_a', 'loc_b', 'p_a', 'p_b', 'profit_a', 'profit_b', 'f', 'de_dloc_a', 'dp_a_dloc_a',
                 'dpi_a_dloc_a', 'dpi_b_dloc_b']

COST_COLUMNS = ['v', 'w', 'alpha', 'q', 'progress', 'k', 'l', 'unit_cost', 'analytic_unit_cost',
                'cost_at_t0', 'total_cost', 'cost_declined']

RDGAME_COLUMNS = ['row_choice', 'col_choice', 'row_payoff', 'col_payoff', 'is_nash']

TRAJECTORY_COLUMNS = ['cycle', 'phase1_profit_a', 'phase1_profit_b', 'choice_a', 'choice_b',
                      'phase2_gross_a', 'phase2_gross_b', 'progress', 'cost_paid_a', 'cost_paid_b',
                      'net_profit_a', 'net_profit_b', 'differentiation', 'cost_level']