import tensorflow as tf

k = tf.constant([2.0])


def inner():
    return tf.square(k)  # expect: RNC001


def outer():
    return inner()


for epoch in range(3):
    outer()
