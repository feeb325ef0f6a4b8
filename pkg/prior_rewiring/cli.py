# -*- coding: utf-8 -*-
#
# This file is part of Prior-Rewiring.
# Copyright (C) 2026 Prior-Rewiring contributors.
#
# Prior-Rewiring is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Command line interface for prior-rewiring.

Available as ``flask rewiring <command>`` in any application loading the
extension, and as the stand-alone ``prior-rewiring <command>``.
"""

import csv
import os
from functools import wraps

import click
from flask import current_app
from flask.cli import AppGroup, FlaskGroup

from .cayley import build_cayley, trimmed_cayley
from .errors import PriorRewiringError
from .graph import pairs_at_distance
from .harness import Cell, ExperimentConfig, run_experiment, run_sweep_a, \
    run_sweep_b
from .io import read_colour_file, read_edge_list, read_pairs_file, \
    write_edge_list, write_samples
from .rewire import REWIRERS, build_plan, captured_pairs, \
    random_cayley_placement
from .spectral import average_commute_time, commute_time, diameter, \
    effective_resistance, laplacian_summary, spectral_gap
from .synthdata import gen_dataset


def reraise_as_click(f):
    """Report package errors as one-line CLI errors."""
    @wraps(f)
    def decorate(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except PriorRewiringError as exc:
            raise click.ClickException(str(exc))
    return decorate


rewiring = AppGroup('rewiring', help='Prior-informed graph rewiring.')

dataset_option = click.option(
    '--dataset', type=click.Choice(['a', 'b']), required=True,
    help='Synthetic dataset.')
config_option = click.option(
    '--config', 'config_file', type=click.Path(exists=True, dir_okay=False),
    help='Flat KEY = value experiment config.')
out_dir_option = click.option(
    '--out', 'out_dir', type=click.Path(file_okay=False), required=True,
    help='Output directory.')
scale_option = click.option(
    '--scale', type=float, help='Override the count scale factor.')


def load_config(dataset, config_file, out_dir, scale=None):
    """Experiment config from the file, the flags and the app defaults."""
    if config_file:
        cfg = ExperimentConfig.from_pyfile(config_file, dataset)
    else:
        cfg = ExperimentConfig(dataset)
    changes = {'output_dir': out_dir}
    if scale is not None:
        changes['scale'] = scale
    return cfg.replace(**changes)


@rewiring.command('cayley')
@click.option('--size', type=click.IntRange(min=1),
              help='Trim to this many nodes.')
@click.option('--untrimmed-n', type=click.IntRange(min=2),
              help='Emit the full SL(2, Z_n) Cayley graph instead.')
@click.option('--out', type=click.File('w'), default='-',
              help='Edge-list output file.')
@reraise_as_click
def cayley_command(size, untrimmed_n, out):
    """Write a (trimmed) Cayley expander as an edge list."""
    if untrimmed_n is not None:
        graph = build_cayley(untrimmed_n).graph
    elif size is not None:
        graph = trimmed_cayley(size).graph
    else:
        raise click.UsageError('give --size or --untrimmed-n')
    write_edge_list(graph, out)
    current_app.logger.info('cayley graph with %d nodes written',
                            graph.num_nodes)


@rewiring.command('rewire')
@click.option('--in', 'in_file', type=click.File('r'), required=True,
              help='Base graph edge list.')
@click.option('--method', type=click.Choice(REWIRERS), required=True)
@click.option('--d', 'distance', type=click.IntRange(min=1),
              help='Target distance for distance-based methods.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--colours', 'colour_file', type=click.File('r'),
              help='Separate "node colour" file.')
@click.option('--layers', type=click.IntRange(min=1), default=5,
              show_default=True)
@click.option('--include-uncoloured/--exclude-uncoloured', default=None,
              help='Give uncoloured nodes their own cluster.')
@click.option('--report-captured', is_flag=True,
              help='Report distance-d pairs captured by the rewiring.')
@click.option('--out', type=click.File('w'), default='-',
              help='Edge-list output file.')
@reraise_as_click
def rewire_command(in_file, method, distance, seed, colour_file, layers,
                   include_uncoloured, report_captured, out):
    """Rewire a base graph and write the rewired edge list."""
    graph = read_edge_list(in_file)
    if colour_file is not None:
        graph = graph.with_colours(
            read_colour_file(colour_file, graph.num_nodes))
    plan = build_plan(method, graph, layers, d=distance, seed=seed,
                      include_uncoloured=include_uncoloured)
    write_edge_list(plan.rewired, out)
    if report_captured:
        if distance is None:
            raise click.UsageError('--report-captured needs --d')
        target = pairs_at_distance(graph, distance)
        random_count = captured_pairs(
            random_cayley_placement(graph, seed), target)
        click.echo('captured {} of {} distance-{} pairs '
                   '(random cayley placement: {})'.format(
                       captured_pairs(plan.rewired, target), len(target),
                       distance, random_count), err=True)


@rewiring.command('diagnose')
@click.option('--in', 'in_file', type=click.Path(exists=True,
                                                 dir_okay=False),
              required=True, help='Graph edge list.')
@click.option('--pairs', 'pairs_file', type=click.File('r'),
              help='File of "u v" pairs to report.')
@click.option('--out', type=click.File('w'), default='-',
              help='CSV output file.')
@reraise_as_click
def diagnose_command(in_file, pairs_file, out):
    """Report diameter, spectral gap and commute times as CSV."""
    graph = read_edge_list(in_file)
    name = os.path.splitext(os.path.basename(in_file))[0]
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(('graph', 'num_nodes', 'num_edges', 'diameter',
                     'spectral_gap', 'avg_commute_time'))
    writer.writerow((name, graph.num_nodes, graph.num_edges,
                     diameter(graph), repr(spectral_gap(graph)),
                     repr(average_commute_time(graph))))
    if pairs_file is not None:
        summary = laplacian_summary(graph)
        writer.writerow(('graph', 'u', 'v', 'effective_resistance',
                         'commute_time'))
        for u, v in read_pairs_file(pairs_file):
            writer.writerow((
                name, u, v,
                repr(effective_resistance(graph, u, v, summary)),
                repr(commute_time(graph, u, v, summary))))


@rewiring.command('generate')
@dataset_option
@config_option
@out_dir_option
@scale_option
@reraise_as_click
def generate_command(dataset, config_file, out_dir, scale):
    """Generate train and eval samples of a synthetic dataset."""
    cfg = load_config(dataset, config_file, out_dir, scale)
    train_set, eval_set = gen_dataset(cfg.dataset_config())
    os.makedirs(out_dir, exist_ok=True)
    for split, samples in (('train', train_set), ('eval', eval_set)):
        path = os.path.join(out_dir, '{}.samples'.format(split))
        write_samples(samples, path)
        current_app.logger.info('wrote %d %s samples to %s', len(samples),
                                split, path)


@rewiring.command('experiment')
@dataset_option
@config_option
@out_dir_option
@scale_option
@click.option('--rewirer', type=click.Choice(REWIRERS),
              help='Override REWIRER.')
@click.option('--seed', type=int, help='Model seed (default: first seed).')
@reraise_as_click
def experiment_command(dataset, config_file, out_dir, scale, rewirer, seed):
    """Train and evaluate a single cell."""
    cfg = load_config(dataset, config_file, out_dir, scale)
    cell = Cell(rewirer or cfg.rewirer, cfg.c1, cfg.c2, cfg.c3 or 0.0,
                cfg.seeds[0] if seed is None else seed)
    result = run_experiment(cfg, cell)
    click.echo('final_eval_mse={!r}'.format(result.final_eval_mse))


@rewiring.command('sweep')
@dataset_option
@config_option
@out_dir_option
@click.option('--workers', type=click.IntRange(min=1),
              help='Concurrent cells (overrides the environment).')
@scale_option
@reraise_as_click
def sweep_command(dataset, config_file, out_dir, workers, scale):
    """Run the c2/c1 sweep of a dataset and write the reports."""
    cfg = load_config(dataset, config_file, out_dir, scale)
    runner = run_sweep_a if dataset == 'a' else run_sweep_b
    rows = runner(cfg, workers)
    current_app.logger.info('sweep finished with %d rows in %s', len(rows),
                            out_dir)


def _create_app(*args, **kwargs):
    from .factory import create_app
    return create_app()


main = FlaskGroup(create_app=_create_app, add_default_commands=False,
                  help='Prior-informed graph rewiring.')
for _command in rewiring.commands.values():
    main.add_command(_command)
